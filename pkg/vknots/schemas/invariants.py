from pydantic import BaseModel, Field
from typing import Dict, List, Literal, Optional


class CodeRequest(BaseModel):
    code: str = Field(..., description="Gauss code such as U1-O2+U3+O1-O3+U2+")


class Polynomial(BaseModel):
    text: str
    terms: List[List[int]]


class IndexRow(BaseModel):
    chord: int
    sign: int
    ro: int
    ru: int
    lo: int
    lu: int
    ind: int


class AlexanderOut(BaseModel):
    delta0: Polynomial
    delta0_raw: Polynomial
    delta0_prime: Polynomial
    delta0_bar: Polynomial
    phi: Polynomial


class WritheOut(BaseModel):
    w: Polynomial
    wn: Dict[int, int]
    odd_writhe: int
    writhe: int


class VOut(BaseModel):
    v_rep: Polynomial
    modulus: Polynomial


class BoundsOut(BaseModel):
    vc_lower: int
    forbidden_lower_w: int
    forbidden_one_excluded: Literal["yes", "no", "inconclusive"]


class InvariantsResponse(BaseModel):
    code: str
    chords: int
    indices: List[IndexRow]
    alexander: AlexanderOut
    writhe: WritheOut
    v: VOut
    bounds: BoundsOut


class VerifyResponse(BaseModel):
    code: str
    ok: bool
    checks: Dict[str, bool]
    skipped: List[str] = []


class MutantResponse(BaseModel):
    k: int
    knot: str
    mutant: str
    w: Polynomial
    v_knot: Polynomial
    v_mutant: Polynomial
    difference: Polynomial
    difference_is_multiple: bool
    pair_type_knot: str
    pair_type_mutant: str


class ResultRow(BaseModel):
    name: str
    code: str
    delta0: List[List[int]] = []
    w: List[List[int]] = []
    v_rep: List[List[int]] = []
    bounds: Optional[BoundsOut] = None
    status: Literal["ok", "w_mismatch", "v_mismatch", "parse_error"]
    matched_image: Optional[str] = None
    v_sign: Optional[int] = None
    error: Optional[str] = None
