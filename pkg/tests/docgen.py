"""Random annotated documents for round-trip testing."""

import random

from trtimex.normalize import Timex3

TYPES = {
    "DATE": ["2015-03-23", "XXXX-03-02", "2014-FA", "PRESENT_REF"],
    "TIME": ["T11:30", "TMO", "XXXX-WXX-1TMO"],
    "SET": ["P1M", "XXXX-WXX-1", "P1W", "P2D"],
    "DURATION": ["P2D", "P8W", "PXY", "PT3H"],
}
# outside text must not itself look like markup
ALPHABET = "abcçdefgğhıijklmnoöprsştuüvyzABÇĞİIÖŞÜ0123456789 .,:;'’\"&>\n\t-"
INSIDE = ALPHABET + "<"


def _chunk(rng, alphabet, lo, hi):
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(lo, hi)))


def random_document(rng: random.Random):
    """(text, timexes with tids) with disjoint extents and non-empty elements."""
    text = ""
    timexes = []
    for i in range(rng.randint(0, 5)):
        text += _chunk(rng, ALPHABET, 0, 8)
        body = _chunk(rng, INSIDE, 1, 10)
        type_ = rng.choice(sorted(TYPES))
        quant = freq = None
        if type_ == "SET":
            quant = rng.choice([None, "EVERY"])
            freq = rng.choice([None, "2X", "3X"])
        timexes.append(
            Timex3(type_, rng.choice(TYPES[type_]), len(text), len(text) + len(body), body,
                   tid=f"t{i + 1}", quant=quant, freq=freq)
        )
        text += body
    text += _chunk(rng, ALPHABET, 0, 8)
    return text, timexes
