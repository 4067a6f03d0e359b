"""Regenerate src/eaforge/_moduli.py: least-encoding primitive moduli for p^m <= 1024, m >= 2."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from eaforge.field import is_prime, least_primitive_modulus  # noqa: E402

LIMIT = 1024

lines = [
    '"""Built-in moduli: least-encoding primitive polynomial for every p^m <= 1024, m >= 2.',
    "",
    "Generated by tools/gen_moduli.py; part of the versioned artifact. Coefficients are",
    "little-endian and include the leading 1.",
    '"""',
    "",
    "BUILTIN_MODULI: dict[tuple[int, int], tuple[int, ...]] = {",
]
for p in range(2, 33):
    if not is_prime(p):
        continue
    m = 2
    while p**m <= LIMIT:
        lines.append(f"    ({p}, {m}): {least_primitive_modulus(p, m)},")
        m += 1
lines.append("}")
out = Path(__file__).resolve().parents[1] / "src" / "eaforge" / "_moduli.py"
out.write_text("\n".join(lines) + "\n")
print(out.read_text())
