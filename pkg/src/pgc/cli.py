"""Command-line front-end: a thin client of the HTTP service.

By default every subcommand talks to the service in-process, so no server is
needed; ``--server URL`` targets a running instance instead (``pgc serve``
starts one). The CLI owns all file I/O: key and ciphertext files are written
raw by default or as a single lowercase-hex line with ``--hex``, and are
auto-detected on read. Secrets are only ever written to files, never printed.

Exit codes: 0 success, 1 usage, 2 malformed input file, 3 cryptographic
error, 4 attack guard violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .encoding import dearmor, hex_armor
from .errors import FormatError

EXIT_USAGE = 1
EXIT_BAD_INPUT = 2
EXIT_CRYPTO = 3
EXIT_GUARD = 4

_EXIT_BY_ERROR = {"usage": EXIT_USAGE, "format": EXIT_BAD_INPUT, "crypto": EXIT_CRYPTO, "guard": EXIT_GUARD}


class _CommandFailed(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _fail(code: int, message: str):
    raise _CommandFailed(code, message)


def _client(server: str | None):
    if server is None:
        import warnings

        with warnings.catch_warnings():
            # some starlette builds warn about their httpx test-client shim
            warnings.filterwarnings("ignore", message=".*httpx.*")
            from fastapi.testclient import TestClient

        from .service import app

        return TestClient(app)
    import httpx

    return httpx.Client(base_url=server, timeout=300.0)


def _post(client, path: str, payload: dict) -> dict:
    response = client.post(path, json=payload)
    body = response.json()
    if response.status_code != 200:
        error = body.get("error", "usage") if isinstance(body, dict) else "usage"
        detail = body.get("detail", "request failed") if isinstance(body, dict) else body
        _fail(_EXIT_BY_ERROR.get(error, EXIT_USAGE), f"{error} error: {detail}")
    return body


def _read_object_file(path: str) -> bytes:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        _fail(EXIT_BAD_INPUT, f"cannot read {path}: {exc}")
    try:
        return dearmor(raw)
    except FormatError as exc:
        _fail(EXIT_BAD_INPUT, f"{path}: {exc}")


def _read_plain_file(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        _fail(EXIT_BAD_INPUT, f"cannot read {path}: {exc}")


def _write_file(path: str, data: bytes, as_hex: bool) -> None:
    try:
        Path(path).write_bytes(hex_armor(data) if as_hex else data)
    except OSError as exc:
        _fail(EXIT_BAD_INPUT, f"cannot write {path}: {exc}")


def _cmd_keygen(client, args) -> int:
    payload = {"scheme": args.scheme, "degree": args.degree, "seed": args.seed}
    if args.profile is not None:
        payload["cycle_profile"] = args.profile
    body = _post(client, "/v1/keygen", payload)
    public = bytes.fromhex(body["public_key"])
    secret = bytes.fromhex(body["secret_key"])
    _write_file(args.out, public, args.hex)
    _write_file(args.secret, secret, args.hex)
    print(
        f"scheme {args.scheme} keys at degree {args.degree}: "
        f"{args.out} ({len(public)} bytes), {args.secret} ({len(secret)} bytes)"
    )
    return 0


def _cmd_encrypt(client, args) -> int:
    body = _post(
        client,
        "/v1/encrypt",
        {
            "public_key": _read_object_file(args.pub).hex(),
            "plaintext": _read_plain_file(args.infile).hex(),
            "seed": args.seed,
        },
    )
    ciphertext = bytes.fromhex(body["ciphertext"])
    _write_file(args.out, ciphertext, args.hex)
    print(
        f"scheme {body['scheme']}: {body['blocks']} block(s), "
        f"{len(ciphertext)} ciphertext bytes -> {args.out}"
    )
    return 0


def _cmd_decrypt(client, args) -> int:
    body = _post(
        client,
        "/v1/decrypt",
        {
            "public_key": _read_object_file(args.pub).hex(),
            "secret_key": _read_object_file(args.secret).hex(),
            "ciphertext": _read_object_file(args.infile).hex(),
        },
    )
    plaintext = bytes.fromhex(body["plaintext"])
    _write_file(args.out, plaintext, as_hex=False)
    print(f"{len(plaintext)} plaintext bytes -> {args.out}")
    return 0


def _cmd_attack_scheme1(client, args) -> int:
    body = _post(
        client,
        "/v1/attack/scheme1",
        {
            "public_key": _read_object_file(args.pub).hex(),
            "ciphertext": _read_object_file(args.infile).hex(),
        },
    )
    print(f"recovered {len(body['blocks'])} block(s) without the secret key:")
    for index, value in enumerate(body["blocks"]):
        print(f"  block {index}: {value}")
    print(f"plaintext hex: {body['plaintext']}")
    return 0


def _cmd_attack_conjugacy(client, args) -> int:
    body = _post(
        client,
        "/v1/attack/conjugacy",
        {
            "public_key": _read_object_file(args.pub).hex(),
            "max_degree": args.max_degree,
            "workers": args.workers,
        },
    )
    if not body["found"]:
        print("no conjugator found (pairs are not simultaneously conjugate)")
        return 0
    print(f"conjugator found: {body['conjugator']}")
    if args.out:
        _write_file(args.out, bytes.fromhex(body["secret_key"]), args.hex)
        print(f"equivalent secret key -> {args.out}")
    return 0


def _cmd_attack_leakage(client, args) -> int:
    body = _post(
        client,
        "/v1/attack/leakage",
        {"ciphertext": _read_object_file(args.infile).hex()},
    )
    for index, block in enumerate(body["blocks"]):
        print(
            f"block {index}: degree {block['degree']}, "
            f"{block['distinct']} distinct cell value(s)"
        )
        for value, count in block["counts"]:
            print(f"  {value:#010x} x{count}")
    print("these multisets equal the plaintext's: the scheme only transposes cells")
    return 0


def _cmd_demo(client, args) -> int:
    body = _post(client, "/v1/demo", {"seed": args.seed, "degree": args.degree})
    s1, s2 = body["scheme1"], body["scheme2"]
    print(f"demo seed {body['seed']} at degree {body['degree']}")
    print(
        f"[scheme 1] cycle profile {s1['cycle_profile']}, base order {s1['base_order']} "
        f"({s1['capacity_bits']}-bit blocks)"
    )
    print(
        f"           public key body {s1['public_key_body_bits']} bits, "
        f"ciphertext {s1['ciphertext_body_bits']} bits per block"
    )
    print(
        f"           message {s1['message']} -> decrypted {s1['decrypted']} "
        f"({'ok' if s1['roundtrip_ok'] else 'MISMATCH'})"
    )
    if s1["attack_recovered"] is None:
        print("           break skipped: conjugator order too large for a demo-scale scan")
    else:
        print(
            f"           break without secret key -> {s1['attack_recovered']} "
            f"({'ok' if s1['attack_ok'] else 'MISMATCH'})"
        )
    print(
        f"[scheme 2] public key body {s2['public_key_body_bits']} bits, "
        f"plaintext block {s2['plaintext_block_bits']} bits"
    )
    print(
        f"           ciphertext {s2['ciphertext_body_bits']} bits, "
        f"expansion rate {s2['expansion_rate']:.2f}"
    )
    print(f"           roundtrip {'ok' if s2['roundtrip_ok'] else 'MISMATCH'}")
    if s2["leaked_multiset_matches"]:
        print("           ciphertext cell multiset equals the plaintext's (leaks)")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _seed_argument(value: str) -> str:
    stripped = value.strip()
    if not stripped or len(stripped) > 16 or any(c not in "0123456789abcdefABCDEF" for c in stripped):
        raise argparse.ArgumentTypeError("seed must be 1-16 hex digits")
    return stripped


def _profile_argument(value: str) -> list[int]:
    try:
        lengths = [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("profile must be comma-separated integers") from None
    if not lengths or any(length < 1 for length in lengths):
        raise argparse.ArgumentTypeError("cycle lengths must be positive")
    return lengths


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgc",
        description="Toy permutation-group public-key crypto: keygen, encrypt, decrypt, attack.",
    )
    parser.add_argument("--server", help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    keygen = sub.add_parser("keygen", help="generate a key pair")
    keygen.add_argument("--scheme", type=int, choices=(1, 2), required=True)
    keygen.add_argument("--degree", type=int, default=64)
    keygen.add_argument("--out", required=True, help="public key file")
    keygen.add_argument("--secret", required=True, help="secret key file")
    keygen.add_argument("--seed", type=_seed_argument, help="hex seed, up to 16 digits")
    keygen.add_argument("--profile", type=_profile_argument, help="scheme-1 cycle lengths, e.g. 2,3,5")
    keygen.add_argument("--hex", action="store_true", help="write hex-armored files")
    keygen.set_defaults(handler=_cmd_keygen)

    encrypt = sub.add_parser("encrypt", help="encrypt a file (scheme inferred from the key)")
    encrypt.add_argument("--pub", required=True)
    encrypt.add_argument("--in", dest="infile", required=True)
    encrypt.add_argument("--out", required=True)
    encrypt.add_argument("--seed", type=_seed_argument)
    encrypt.add_argument("--hex", action="store_true", help="write hex-armored ciphertext")
    encrypt.set_defaults(handler=_cmd_encrypt)

    decrypt = sub.add_parser("decrypt", help="decrypt a file")
    decrypt.add_argument("--secret", required=True)
    decrypt.add_argument("--pub", required=True)
    decrypt.add_argument("--in", dest="infile", required=True)
    decrypt.add_argument("--out", required=True)
    decrypt.set_defaults(handler=_cmd_decrypt)

    attack = sub.add_parser("attack", help="run an attack against public data")
    attack_sub = attack.add_subparsers(dest="attack_command", required=True)

    a1 = attack_sub.add_parser("scheme1", help="recover scheme-1 plaintext from public data")
    a1.add_argument("--pub", required=True)
    a1.add_argument("--in", dest="infile", required=True)
    a1.set_defaults(handler=_cmd_attack_scheme1)

    conj = attack_sub.add_parser("conjugacy", help="brute-force a scheme-2 conjugator")
    conj.add_argument("--pub", required=True)
    conj.add_argument("--max-degree", type=int, default=9)
    conj.add_argument("--workers", type=int, default=1)
    conj.add_argument("--out", help="write the recovered key as a secret-key file")
    conj.add_argument("--hex", action="store_true")
    conj.set_defaults(handler=_cmd_attack_conjugacy)

    leak = attack_sub.add_parser("leakage", help="show what scheme-2 ciphertext cells reveal")
    leak.add_argument("--in", dest="infile", required=True)
    leak.set_defaults(handler=_cmd_attack_leakage)

    demo = sub.add_parser("demo", help="run both schemes end to end and print the figures")
    demo.add_argument("--seed", type=_seed_argument)
    demo.add_argument("--degree", type=int, default=64)
    demo.set_defaults(handler=_cmd_demo)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(handler=None)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    if args.command == "serve":
        return _cmd_serve(args)
    try:
        with _client(args.server) as client:
            return args.handler(client, args)
    except _CommandFailed as failure:
        print(f"error: {failure}", file=sys.stderr)
        return failure.code
    except Exception as exc:  # connection failures and other client-side trouble
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
