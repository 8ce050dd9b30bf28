"""Porter suffix-stripping stemmer.

Implements the classic algorithm (steps 1a through 5b) with the behaviour
of the author's reference distribution, which the standard reference
vocabulary/output word lists were generated from. That behaviour departs
from the original article text in three documented places: step 2 uses
bli->ble rather than abli->able, step 2 includes logi->log, and words of
one or two letters are returned unchanged.

Input must be a lowercase a-z token; output is lowercase a-z and never
longer than the input.
"""

from __future__ import annotations

_VOWELS = frozenset("aeiou")


def _cons_map(word: str) -> list[bool]:
    # True where the letter acts as a consonant. 'y' is a consonant at the
    # start of the word or after a vowel, a vowel after a consonant.
    out: list[bool] = []
    for i, ch in enumerate(word):
        if ch in _VOWELS:
            out.append(False)
        elif ch == "y":
            out.append(True if i == 0 else not out[i - 1])
        else:
            out.append(True)
    return out


def _measure(stem: str) -> int:
    # m in the [C](VC)^m[V] decomposition: number of vowel-to-consonant
    # transitions. A trailing vowel run contributes nothing.
    m = 0
    prev_vowel = False
    for cons in _cons_map(stem):
        if cons and prev_vowel:
            m += 1
        prev_vowel = not cons
    return m


def _contains_vowel(stem: str) -> bool:
    return not all(_cons_map(stem))


def _ends_double_consonant(word: str) -> bool:
    if len(word) < 2 or word[-1] != word[-2]:
        return False
    return _cons_map(word)[-1]


def _ends_cvc(stem: str) -> bool:
    # consonant-vowel-consonant ending where the final consonant is not
    # w, x or y; needs at least three letters.
    if len(stem) < 3 or stem[-1] in "wxy":
        return False
    cons = _cons_map(stem)
    return cons[-3] and not cons[-2] and cons[-1]


def _step1a(w: str) -> str:
    if w.endswith("sses"):
        return w[:-2]
    if w.endswith("ies"):
        return w[:-2]
    if w.endswith("ss"):
        return w
    if w.endswith("s"):
        return w[:-1]
    return w


def _step1b(w: str) -> str:
    if w.endswith("eed"):
        # longest suffix wins: an 'eed' word never falls through to 'ed'
        return w[:-1] if _measure(w[:-3]) > 0 else w
    if w.endswith("ed"):
        stem = w[:-2]
        return _step1b_fixup(stem) if _contains_vowel(stem) else w
    if w.endswith("ing"):
        stem = w[:-3]
        return _step1b_fixup(stem) if _contains_vowel(stem) else w
    return w


def _step1b_fixup(w: str) -> str:
    # applied only after removing -ed or -ing
    if w.endswith(("at", "bl", "iz")):
        return w + "e"
    if _ends_double_consonant(w) and w[-1] not in "lsz":
        return w[:-1]
    if _measure(w) == 1 and _ends_cvc(w):
        return w + "e"
    return w


def _step1c(w: str) -> str:
    if w.endswith("y") and _contains_vowel(w[:-1]):
        return w[:-1] + "i"
    return w


# Ordered so that of any two suffixes that can match the same word, the
# longer comes first; only the first matching suffix is considered, and a
# failed measure condition stops the step.
_STEP2_RULES = (
    ("ational", "ate"), ("tional", "tion"), ("enci", "ence"), ("anci", "ance"),
    ("izer", "ize"), ("bli", "ble"), ("alli", "al"), ("entli", "ent"),
    ("eli", "e"), ("ousli", "ous"), ("ization", "ize"), ("ation", "ate"),
    ("ator", "ate"), ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"),
    ("ousness", "ous"), ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
    ("logi", "log"),
)

_STEP3_RULES = (
    ("icate", "ic"), ("ative", ""), ("alize", "al"), ("iciti", "ic"),
    ("ical", "ic"), ("ful", ""), ("ness", ""),
)


def _step2(w: str) -> str:
    for suffix, repl in _STEP2_RULES:
        if w.endswith(suffix):
            stem = w[: -len(suffix)]
            return stem + repl if _measure(stem) > 0 else w
    return w


def _step3(w: str) -> str:
    for suffix, repl in _STEP3_RULES:
        if w.endswith(suffix):
            stem = w[: -len(suffix)]
            return stem + repl if _measure(stem) > 0 else w
    return w


_STEP4_HEAD = ("al", "ance", "ence", "er", "ic", "able", "ible", "ant",
               "ement", "ment", "ent")
_STEP4_TAIL = ("ou", "ism", "ate", "iti", "ous", "ive", "ize")


def _step4(w: str) -> str:
    for suffix in _STEP4_HEAD:
        if w.endswith(suffix):
            stem = w[: -len(suffix)]
            return stem if _measure(stem) > 1 else w
    if w.endswith("ion"):
        # -ion drops only when the remaining stem ends in s or t
        stem = w[:-3]
        if stem and stem[-1] in "st" and _measure(stem) > 1:
            return stem
        return w
    for suffix in _STEP4_TAIL:
        if w.endswith(suffix):
            stem = w[: -len(suffix)]
            return stem if _measure(stem) > 1 else w
    return w


def _step5a(w: str) -> str:
    if w.endswith("e"):
        stem = w[:-1]
        m = _measure(stem)
        if m > 1 or (m == 1 and not _ends_cvc(stem)):
            return stem
    return w


def _step5b(w: str) -> str:
    if w.endswith("l") and _ends_double_consonant(w) and _measure(w) > 1:
        return w[:-1]
    return w


def stem(token: str) -> str:
    """Stem of a lowercase a-z token, e.g. 'happiness' -> 'happi'."""
    if not token or any(c < "a" or c > "z" for c in token):
        raise ValueError(f"not a lowercase a-z token: {token!r}")
    if len(token) <= 2:
        return token
    w = _step1a(token)
    w = _step1b(w)
    w = _step1c(w)
    w = _step2(w)
    w = _step3(w)
    w = _step4(w)
    w = _step5a(w)
    w = _step5b(w)
    return w
