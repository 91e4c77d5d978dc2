"""Shared helpers for the canonical text form of sums of terms."""

_SUPERSCRIPT = str.maketrans("-0123456789", "⁻⁰¹²³⁴⁵⁶⁷⁸⁹")


def is_atomic(s):
    # safe to juxtapose with '*' without parentheses
    return " " not in s and "+" not in s and "-" not in s[1:]


def power(symbol, n):
    if n == 0:
        return ""
    if n == 1:
        return symbol
    return f"{symbol}^{n}"


def superscript(n):
    return str(n).translate(_SUPERSCRIPT)


def term(coef, mono):
    if not mono:
        return coef
    if coef == "1":
        return mono
    if coef == "-1":
        return "-" + mono
    if not is_atomic(coef):
        coef = f"({coef})"
    return f"{coef}*{mono}"


def join_terms(terms):
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out
