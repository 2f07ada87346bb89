"""Regenerate src/ctcsidh/_chain_table.py from the breadth-first chain search."""

import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from ctcsidh.params import find_shortest_chain, odd_primes  # noqa: E402


def main():
    primes = odd_primes(73) + [587]
    lines = [
        '"""Shortest differential addition chains as move strings.',
        "",
        "Generated by tools/gen_chain_table.py; do not edit by hand.",
        '"""',
        "",
        "CHAIN_OPS = {",
    ]
    for ell in primes:
        lines.append(f"    {ell}: {find_shortest_chain(ell).moves!r},")
    lines.append("}")
    (ROOT / "src" / "ctcsidh" / "_chain_table.py").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
