from pydantic import BaseModel, model_validator
from typing import List, Literal, Optional, Tuple


class MoveSpec(BaseModel):
    kind: Literal["Ia", "Ib", "IIa", "IIIa", "FO", "FU"]
    # Insertion gap (0..2n) for Ia/Ib/IIa, endpoint position for FO/FU
    pos: Optional[int] = None
    pos_b: Optional[int] = None
    chords: Optional[Tuple[int, int, int]] = None

    @model_validator(mode="after")
    def _check_anchors(self):
        if self.kind == "IIIa":
            if self.chords is None:
                raise ValueError("IIIa needs three chord ids")
            if len(set(self.chords)) != 3:
                raise ValueError("IIIa chords must be pairwise distinct")
            return self
        if self.pos is None or self.pos < 0:
            raise ValueError(f"{self.kind} needs a non-negative pos")
        if self.kind == "IIa" and (self.pos_b is None or self.pos_b < 0):
            raise ValueError("IIa needs a non-negative pos_b")
        return self


class MoveScript(BaseModel):
    moves: List[MoveSpec]
