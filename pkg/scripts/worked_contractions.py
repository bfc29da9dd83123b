#!/usr/bin/env python3
"""Run the worked contractibility searches and print their certificates.

Covers the 16-letter third-move example, the monoliteral words a^3..a^5
over a fixed point, ababa over a free orbit, and the exceptional merge of
the two length-6 families.  a^5 falls back to replaying the explicit
20-letter contraction chain when the bounded search abstains.
"""

import argparse
import sys
import time

from nanowords import (Alphabet, Nanoword, desingularize, from_word,
                       nanoword_from_pattern, verify_certificate)
from nanowords.moves import (HomotopyData, certificate_from_states,
                             search_contractible, search_homotopic)

from pathlib import Path

A5_CHAIN = [
    "12 13 14 15 12 23 24 25 13 23 34 35 14 24 34 45 15 25 35 45",
    "13 12 14 15 23 12 24 25 23 13 34 35 14 24 34 45 15 25 35 45",
    "13 14 12 15 23 24 12 25 23 13 34 35 24 14 34 45 15 25 35 45",
    "13 14 15 12 23 24 25 12 23 13 34 35 24 14 34 45 25 15 35 45",
    "13 14 15 24 25 13 34 35 24 14 34 45 25 15 35 45",
    "14 13 15 24 25 34 13 35 24 34 14 45 25 15 35 45",
    "14 15 13 24 25 34 35 13 24 34 14 45 25 35 15 45",
    "14 15 25 34 35 34 14 45 25 35 15 45",
    "15 14 25 34 35 34 45 14 25 35 45 15",
    "15 34 35 34 45 35 45 15",
    "15 35 34 45 34 45 35 15",
    "34 45 34 45",
    "",
]


def show(name, cert, data):
    if cert is None:
        print(f"{name}: UNKNOWN (budget exhausted)")
        return False
    ok = verify_certificate(cert, data)
    print(f"{name}: {len(cert.moves)} move(s), replay "
          f"{'verified' if ok else 'FAILED'}")
    for move in cert.moves:
        print(f"    {move.format()}")
    return ok


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-states", type=int, default=500000)
    parser.add_argument("--a5-search-states", type=int, default=2000,
                        help="bounded attempt before replaying the chain")
    args = parser.parse_args()
    ok = True

    al16 = Alphabet(["e", "E", "x", "y"],
                    {"e": "E", "E": "e", "x": "x", "y": "y"})
    data16 = HomotopyData(al16)
    w16 = nanoword_from_pattern(
        al16, list("ABCDEFBGDHFAGCHE"),
        {"A": "e", "B": "e", "F": "e", "C": "E", "D": "E", "G": "E",
         "E": "x", "H": "y"})
    t0 = time.time()
    cert = search_contractible(w16, data16, 20, args.max_states)
    ok &= show(f"ABCDEFBGDHFAGCHE ({time.time() - t0:.1f}s)", cert, data16)

    one = Alphabet(["a"])
    d1 = HomotopyData(one)
    for m in (3, 4):
        wd = desingularize(from_word("a" * m, one))
        t0 = time.time()
        cert = search_contractible(wd, d1, 20, args.max_states)
        ok &= show(f"(a^{m})^d ({time.time() - t0:.1f}s)", cert, d1)

    w5 = desingularize(from_word("a" * 5, one))
    t0 = time.time()
    cert = search_contractible(w5, d1, 20, args.a5_search_states,
                               insert_values=())
    if cert is None:
        states = [Nanoword(one, chain.split(),
                           {t: "a" for t in chain.split()})
                  for chain in A5_CHAIN]
        cert = certificate_from_states(states, d1)
        print(f"(a^5)^d: bounded search abstained after "
              f"{time.time() - t0:.1f}s; replaying the worked chain")
    ok &= show("(a^5)^d", cert, d1)

    alf = Alphabet(["a", "b"], {"a": "b", "b": "a"})
    ababa = desingularize(from_word("ababa", alf))
    t0 = time.time()
    cert = search_contractible(ababa, HomotopyData(alf), 20, args.max_states)
    ok &= show(f"(ababa)^d ({time.time() - t0:.1f}s)", cert, HomotopyData(alf))

    al1 = Alphabet(["a", "A"], {"a": "A", "A": "a"})
    df = HomotopyData(al1)
    w5n = nanoword_from_pattern(al1, "ABACBC", {"A": "a", "B": "a", "C": "a"})
    w4n = nanoword_from_pattern(al1, "ABCBCA", {"A": "a", "B": "a", "C": "a"})
    t0 = time.time()
    cert = search_homotopic(w5n, w4n, df, 20, args.max_states)
    ok &= show(f"ABACBC ~ ABCBCA at a=b=c ({time.time() - t0:.1f}s)", cert, df)

    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
