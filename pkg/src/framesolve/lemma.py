"""Tiny verb lemmatizer: irregular table plus suffix stripping.

Only needs to cover the closed set of verbs that trigger frames; it is
not a general-purpose morphological analyzer.
"""

IRREGULAR = {
    "had": "have", "has": "have", "having": "have",
    "gave": "give", "given": "give", "giving": "give",
    "got": "get", "gotten": "get", "getting": "get",
    "took": "take", "taken": "take", "taking": "take",
    "bought": "buy", "sold": "sell", "selling": "sell",
    "found": "find", "lost": "lose", "losing": "lose",
    "ate": "eat", "eaten": "eat", "drank": "drink", "drunk": "drink",
    "spent": "spend", "paid": "pay", "made": "make", "making": "make",
    "built": "build", "won": "win", "winning": "win",
    "kept": "keep", "held": "hold", "left": "leave",
    "broke": "break", "broken": "break",
    "sent": "send", "split": "split", "splitting": "split",
    "ran": "run", "running": "run",
    "did": "do", "done": "do", "does": "do",
    "is": "be", "are": "be", "was": "be", "were": "be", "been": "be",
    "contained": "contain", "contains": "contain",
    "remained": "remain", "remains": "remain",
    "gathered": "gather", "gathers": "gather",
    "earned": "earn", "earns": "earn",
}

_VOWELS = "aeiou"


def _restore_stem(stem):
    # dropped -> drop; baked/divided/created -> bake/divide/create
    if len(stem) > 2 and stem[-1] == stem[-2] and stem[-1] not in _VOWELS:
        return stem[:-1]
    if len(stem) >= 2 and stem[-1] not in _VOWELS and stem[-2] in _VOWELS:
        return stem + "e"
    return stem


def lemmatize(word):
    w = word.lower()
    if w in IRREGULAR:
        return IRREGULAR[w]
    if w.endswith("ies") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith("ied") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith("ing") and len(w) > 5:
        return _restore_stem(w[:-3])
    if w.endswith("ed") and len(w) > 3:
        return _restore_stem(w[:-2])
    if w.endswith("es") and len(w) > 3 and w[-3] in "sxzh":
        return w[:-2]
    if w.endswith("s") and len(w) > 2 and not w.endswith("ss"):
        return w[:-1]
    return w
