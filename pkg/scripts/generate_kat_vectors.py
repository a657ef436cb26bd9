#!/usr/bin/env python3
"""Regenerate the response-file fixtures under tests/vectors/.

Expected values come from Python's hashlib (OpenSSL), which is independent
of everything in src/.  File layout follows the NIST CAVP response-file
conventions: `Len` in bits, `Msg`/`MD`/`Output` in lowercase hex, `Msg = 00`
for the empty message, one `[Tested = ...]` or `[L = ...]` bracket header
per file.  Messages are pseudorandom but fixed by a per-file seed so reruns
are byte-identical.
"""

import hashlib
import random
from pathlib import Path

VECTOR_DIR = Path(__file__).resolve().parent.parent / "tests" / "vectors"

SHA3 = {
    "SHA3-224": (hashlib.sha3_224, 224, 1152),
    "SHA3-256": (hashlib.sha3_256, 256, 1088),
    "SHA3-384": (hashlib.sha3_384, 384, 832),
    "SHA3-512": (hashlib.sha3_512, 512, 576),
}
SHAKE = {
    "SHAKE128": (hashlib.shake_128, 1344),
    "SHAKE256": (hashlib.shake_256, 1088),
}


def _msg_of(rng, nbits):
    return rng.randbytes(nbits // 8)


def _hex(b):
    return b.hex() if b else "00"


def write_sha3_shortmsg(name, fn, dbits, rate_bits):
    rng = random.Random(f"{name}-shortmsg")
    lines = [
        f"# {name} byte-oriented short message vectors",
        "# generated by scripts/generate_kat_vectors.py (hashlib expected values)",
        "# length values are in bits",
        "",
        f"[L = {dbits}]",
        "",
    ]
    for nbits in range(0, 2 * rate_bits + 136, 8):
        msg = _msg_of(rng, nbits)
        lines += [f"Len = {nbits}",
                  f"Msg = {_hex(msg)}",
                  f"MD = {fn(msg).hexdigest()}",
                  ""]
    path = VECTOR_DIR / f"{name.replace('-', '_')}ShortMsg.rsp"
    path.write_text("\n".join(lines))
    print(path)


def write_shake_shortmsg(name, fn, rate_bits, outlen_bits):
    rng = random.Random(f"{name}-shortmsg")
    lines = [
        f"# {name} byte-oriented short message vectors",
        "# generated by scripts/generate_kat_vectors.py (hashlib expected values)",
        "# length values are in bits",
        "",
        f"[Tested = {name}]",
        f"[Outputlen = {outlen_bits}]",
        "",
    ]
    for nbits in range(0, 2 * rate_bits + 136, 8):
        msg = _msg_of(rng, nbits)
        lines += [f"Len = {nbits}",
                  f"Msg = {_hex(msg)}",
                  f"Output = {fn(msg).hexdigest(outlen_bits // 8)}",
                  ""]
    path = VECTOR_DIR / f"{name}ShortMsg.rsp"
    path.write_text("\n".join(lines))
    print(path)


def write_shake_variableout(name, fn, rate_bits):
    rng = random.Random(f"{name}-variableout")
    outlens = list(range(8, 2049, 8)) + [rate_bits, rate_bits + 8,
                                         2 * rate_bits, 2 * rate_bits + 8, 3000 // 8 * 8]
    lines = [
        f"# {name} variable output length vectors",
        "# generated by scripts/generate_kat_vectors.py (hashlib expected values)",
        "",
        f"[Tested = {name}]",
        "[Input Length = 128]",
        "",
    ]
    for count, outbits in enumerate(sorted(set(outlens))):
        msg = _msg_of(rng, 128)
        lines += [f"COUNT = {count}",
                  f"Outputlen = {outbits}",
                  f"Msg = {_hex(msg)}",
                  f"Output = {fn(msg).hexdigest(outbits // 8)}",
                  ""]
    path = VECTOR_DIR / f"{name}VariableOut.rsp"
    path.write_text("\n".join(lines))
    print(path)


def main():
    VECTOR_DIR.mkdir(parents=True, exist_ok=True)
    for name, (fn, dbits, rate) in SHA3.items():
        write_sha3_shortmsg(name, fn, dbits, rate)
    for name, (fn, rate) in SHAKE.items():
        write_shake_shortmsg(name, fn, rate, 256)
        write_shake_variableout(name, fn, rate)


if __name__ == "__main__":
    main()
