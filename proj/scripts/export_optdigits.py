#!/usr/bin/env python3
"""Write the 1797-sample handwritten-digits test set as a labeled point file.

scikit-learn ships this set offline (it is the UCI optical-digits test
partition). Output: 64 integer features followed by the digit label, one
sample per line, consumable by `apx cluster --points ... --label-col 64`.
"""
import os
import sys

from sklearn.datasets import load_digits


def main() -> int:
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "optdigits.txt")
    digits = load_digits()
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w") as fh:
        for row, label in zip(digits.data, digits.target):
            fields = [("%g" % v) for v in row] + [str(int(label))]
            fh.write(" ".join(fields) + "\n")
    print(f"wrote {len(digits.target)} samples to {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
