#!/usr/bin/env python3
"""Regenerates counts_<tag>.json by brute-force filtering.

Independent of the C++ library: orientation-preservation is decided here by
the cyclic-sequence test (at most one cyclic descent in the image sequence
read along the domain), not by searching for an ideal.
"""
import itertools
import json
import pathlib

TAGS = ["PT", "T", "I", "O", "PO", "POI", "OP", "POP", "POPI"]
MAX_N = 5


def cyclic(seq):
    t = len(seq)
    return sum(1 for i in range(t) if seq[i] > seq[(i + 1) % t]) <= 1


def monotone(seq):
    return all(a <= b for a, b in zip(seq, seq[1:]))


def members(tag, n):
    partial = tag in ("PT", "I", "PO", "POI", "POP", "POPI")
    values = range(0, n + 1) if partial else range(1, n + 1)
    for cand in itertools.product(values, repeat=n):
        seq = [v for v in cand if v != 0]
        injective = len(set(seq)) == len(seq)
        ok = {
            "PT": True,
            "T": True,
            "I": injective,
            "O": monotone(seq),
            "PO": monotone(seq),
            "POI": monotone(seq) and injective,
            "OP": cyclic(seq),
            "POP": cyclic(seq),
            "POPI": cyclic(seq) and injective,
        }[tag]
        if ok:
            yield cand


def main():
    out = pathlib.Path(__file__).resolve().parent
    for tag in TAGS:
        counts = {str(n): sum(1 for _ in members(tag, n)) for n in range(1, MAX_N + 1)}
        (out / f"counts_{tag}.json").write_text(json.dumps(counts, indent=2) + "\n")
        print(tag, counts)


if __name__ == "__main__":
    main()
