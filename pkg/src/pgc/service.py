"""HTTP service exposing keygen, encryption, decryption, and the attacks.

All binary payloads travel as lowercase hex strings; files on disk are the
caller's business (the CLI does that part). Error responses carry
``{"error": <category>, "detail": <message>}`` where the category is one of
"usage", "format", "crypto" or "guard"; the CLI turns these into exit codes.
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import attacks, envelope, scheme1, scheme2
from .demo import run_demo
from .encoding import (
    KIND_SCHEME1_CIPHERTEXT,
    KIND_SCHEME2_CIPHERTEXT,
    deserialize,
    object_size,
    serialize,
)
from .errors import GuardError, KeyMismatchError, PgcError
from .keys import (
    Scheme1PublicKey,
    Scheme1SecretKey,
    Scheme2Ciphertext,
    Scheme2PublicKey,
    Scheme2SecretKey,
)
from .rng import RandomSource

HEX_BYTES = r"^(?:[0-9a-f]{2})*$"
HEX_SEED = r"^[0-9a-fA-F]{1,16}$"


class KeygenRequest(BaseModel):
    scheme: Literal[1, 2]
    degree: int = Field(default=64, ge=2, le=65535)
    seed: str | None = Field(default=None, pattern=HEX_SEED)
    cycle_profile: list[int] | None = None


class KeygenResponse(BaseModel):
    scheme: int
    degree: int
    public_key: str
    secret_key: str


class EncryptRequest(BaseModel):
    public_key: str = Field(pattern=HEX_BYTES)
    plaintext: str = Field(pattern=HEX_BYTES)
    seed: str | None = Field(default=None, pattern=HEX_SEED)


class EncryptResponse(BaseModel):
    scheme: int
    blocks: int
    ciphertext: str


class DecryptRequest(BaseModel):
    public_key: str = Field(pattern=HEX_BYTES)
    secret_key: str = Field(pattern=HEX_BYTES)
    ciphertext: str = Field(pattern=HEX_BYTES)


class DecryptResponse(BaseModel):
    plaintext: str


class Scheme1AttackRequest(BaseModel):
    public_key: str = Field(pattern=HEX_BYTES)
    ciphertext: str = Field(pattern=HEX_BYTES)


class Scheme1AttackResponse(BaseModel):
    blocks: list[int]
    plaintext: str


class ConjugacyAttackRequest(BaseModel):
    public_key: str = Field(pattern=HEX_BYTES)
    max_degree: int = Field(default=attacks.CONJUGACY_DEGREE_LIMIT, ge=1)
    workers: int = Field(default=1, ge=1, le=32)


class ConjugacyAttackResponse(BaseModel):
    found: bool
    conjugator: list[int] | None
    secret_key: str | None


class LeakageRequest(BaseModel):
    ciphertext: str = Field(pattern=HEX_BYTES)


class BlockLeakage(BaseModel):
    degree: int
    distinct: int
    cells_sorted: list[int]
    counts: list[tuple[int, int]]


class LeakageResponse(BaseModel):
    blocks: list[BlockLeakage]


class DemoRequest(BaseModel):
    seed: str | None = Field(default=None, pattern=HEX_SEED)
    degree: int = Field(default=64, ge=2, le=256)


app = FastAPI(
    title="pgc",
    description="Toy permutation-group public-key cryptosystems and their breaks.",
)


@app.exception_handler(PgcError)
async def _domain_error(request, exc: PgcError):
    status = 400 if exc.category == "format" else 422
    return JSONResponse(status_code=status, content={"error": exc.category, "detail": str(exc)})


@app.exception_handler(ValueError)
async def _usage_error(request, exc: ValueError):
    return JSONResponse(status_code=422, content={"error": "usage", "detail": str(exc)})


@app.exception_handler(RequestValidationError)
async def _validation_error(request, exc: RequestValidationError):
    return JSONResponse(status_code=422, content={"error": "usage", "detail": str(exc)})


def _rng_from(seed: str | None) -> RandomSource:
    return RandomSource(int(seed, 16)) if seed is not None else RandomSource()


def _load(kind_name: str, payload: str, *expected_types):
    obj = deserialize(bytes.fromhex(payload))
    if expected_types and not isinstance(obj, expected_types):
        raise KeyMismatchError(f"{type(obj).__name__} is not a {kind_name}")
    return obj


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/v1/keygen", response_model=KeygenResponse)
def keygen(request: KeygenRequest) -> KeygenResponse:
    rng = _rng_from(request.seed)
    if request.scheme == 1:
        profile = request.cycle_profile or scheme1.DEFAULT_CYCLE_PROFILE
        pub, sec = scheme1.keygen(rng, request.degree, profile)
    else:
        if request.cycle_profile is not None:
            raise ValueError("cycle_profile applies to scheme 1 only")
        pub, sec = scheme2.keygen(rng, request.degree)
    return KeygenResponse(
        scheme=request.scheme,
        degree=request.degree,
        public_key=serialize(pub).hex(),
        secret_key=serialize(sec).hex(),
    )


@app.post("/v1/encrypt", response_model=EncryptResponse)
def encrypt(request: EncryptRequest) -> EncryptResponse:
    pub = _load("public key", request.public_key, Scheme1PublicKey, Scheme2PublicKey)
    data = envelope.encrypt_bytes(pub, bytes.fromhex(request.plaintext), _rng_from(request.seed))
    if isinstance(pub, Scheme1PublicKey):
        scheme, kind = 1, KIND_SCHEME1_CIPHERTEXT
    else:
        scheme, kind = 2, KIND_SCHEME2_CIPHERTEXT
    record_size = object_size(kind, pub.degree)
    blocks = (len(data) - envelope.LENGTH_PREFIX_SIZE) // record_size
    return EncryptResponse(scheme=scheme, blocks=blocks, ciphertext=data.hex())


@app.post("/v1/decrypt", response_model=DecryptResponse)
def decrypt(request: DecryptRequest) -> DecryptResponse:
    pub = _load("public key", request.public_key, Scheme1PublicKey, Scheme2PublicKey)
    sec = _load("secret key", request.secret_key, Scheme1SecretKey, Scheme2SecretKey)
    plaintext = envelope.decrypt_bytes(sec, pub, bytes.fromhex(request.ciphertext))
    return DecryptResponse(plaintext=plaintext.hex())


@app.post("/v1/attack/scheme1", response_model=Scheme1AttackResponse)
def attack_scheme1(request: Scheme1AttackRequest) -> Scheme1AttackResponse:
    pub = _load("scheme-1 public key", request.public_key, Scheme1PublicKey)
    blocks, plaintext = attacks.attack_scheme1_stream(pub, bytes.fromhex(request.ciphertext))
    return Scheme1AttackResponse(blocks=blocks, plaintext=plaintext.hex())


@app.post("/v1/attack/conjugacy", response_model=ConjugacyAttackResponse)
def attack_conjugacy(request: ConjugacyAttackRequest) -> ConjugacyAttackResponse:
    pub = _load("scheme-2 public key", request.public_key, Scheme2PublicKey)
    if pub.degree > request.max_degree:
        raise GuardError(
            f"key degree {pub.degree} exceeds the requested bound {request.max_degree}"
        )
    pairs = [(pub.gen0, pub.twisted0), (pub.gen1, pub.twisted1)]
    found = attacks.brute_force_conjugator(pairs, pub.degree, workers=request.workers)
    if found is None:
        return ConjugacyAttackResponse(found=False, conjugator=None, secret_key=None)
    return ConjugacyAttackResponse(
        found=True,
        conjugator=list(found.image),
        secret_key=serialize(Scheme2SecretKey(found)).hex(),
    )


@app.post("/v1/attack/leakage", response_model=LeakageResponse)
def attack_leakage(request: LeakageRequest) -> LeakageResponse:
    _, records = envelope.split_envelope(bytes.fromhex(request.ciphertext))
    if not all(isinstance(r, Scheme2Ciphertext) for r in records):
        raise KeyMismatchError("leakage analysis applies to scheme-2 ciphertexts")
    reports = [attacks.leakage_report(r) for r in records]
    return LeakageResponse(
        blocks=[
            BlockLeakage(
                degree=r.degree,
                distinct=r.distinct,
                cells_sorted=list(r.cells_sorted),
                counts=list(r.counts),
            )
            for r in reports
        ]
    )


@app.post("/v1/demo")
def demo(request: DemoRequest) -> dict:
    seed = int(request.seed, 16) if request.seed is not None else None
    return run_demo(seed, request.degree)
