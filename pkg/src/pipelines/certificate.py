"""
Certificate Module
The machine-checkable record emitted by every construction, with deterministic JSON output
"""
import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from src.extensions.certificates import FaithfulRecord, NonsplitRecord
from src.linalg.matrix_io import dump_matrix, dump_vector

CERTIFICATE_VERSION = 1


class Construction(BaseModel):
    kind: str
    k: int
    p: int
    j: Optional[int] = None
    within_hypotheses: bool = True


class Order4Section(BaseModel):
    element: str
    random_samples: int
    random_all_order4: bool
    linear_witness: bool
    exhaustive: bool
    exhaustive_all_order4: Optional[bool] = None


class NonsplitSection(BaseModel):
    system_dims: Dict[str, int]
    feasible: bool
    nonsplit: bool
    order4_sweep: Optional[Order4Section] = None
    complement: List[str] = Field(default_factory=list)
    fallback_used: bool = False
    twisted_dim: Optional[int] = None


class FaithfulSection(BaseModel):
    gcore_dim: int
    stabilizer_m_dim: int
    faithful: bool
    argument: List[str]
    order_check: Optional[Dict[str, int]] = None


class ModuleSection(BaseModel):
    dim: int
    factor_dims: List[int] = Field(default_factory=list)
    dims: Dict[str, int] = Field(default_factory=dict)


class ReplayData(BaseModel):
    """
    Enough data to re-check the linear algebra without re-deriving the cocycle.

    Attributes:
        presentation: Group kind of the base presentation ("alternating")
        n (int): Degree of the abstract base group
        module_action: dump_matrix of M's action, one per base generator
        tails: dump_vector of each relator tail in M
        stabilizer_m: dump_matrix of the point stabilizer's M-part
        image_degree (int): Degree of the permutation image
    """

    presentation: str
    n: int
    module_action: List[str]
    tails: List[str]
    stabilizer_m: str
    image_degree: int
    cocycle_values: Dict[str, str] = Field(default_factory=dict)
    section_values: List[int] = Field(default_factory=list)


class Certificate(BaseModel):
    version: int = CERTIFICATE_VERSION
    construction: Construction
    degrees: Dict[str, int]
    generator_images: List[str]
    transitive: bool
    nonsplit: NonsplitSection
    faithful: FaithfulSection
    module: ModuleSection
    structure: Dict[str, Any] = Field(default_factory=dict)
    cocycle: Dict[str, Any] = Field(default_factory=dict)
    seeds: Dict[str, int] = Field(default_factory=dict)
    sanity: List[str] = Field(default_factory=list)
    annotations: List[str] = Field(default_factory=list)
    replay: ReplayData

    @property
    def positive(self) -> bool:
        return self.transitive and self.nonsplit.nonsplit and self.faithful.faithful

    def to_json(self) -> str:
        """Sorted-key JSON; equal runs give byte-identical text"""
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"

    def write(self, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json(), encoding="utf-8")
        return path

    @classmethod
    def read(cls, path: Path) -> "Certificate":
        return cls.model_validate_json(Path(path).read_text(encoding="utf-8"))


def nonsplit_section(record: NonsplitRecord, fallback_used: bool = False,
                     twisted_dim: Optional[int] = None) -> NonsplitSection:
    order4 = None
    if record.order4 is not None:
        r = record.order4
        order4 = Order4Section(element=r.element, random_samples=r.random_samples,
                               random_all_order4=r.random_all_order4, linear_witness=r.linear_witness,
                               exhaustive=r.exhaustive, exhaustive_all_order4=r.exhaustive_all_order4)
    return NonsplitSection(
        system_dims={"unknowns": record.unknowns, "equations": record.equations, "rank": record.rank},
        feasible=record.feasible, nonsplit=record.nonsplit, order4_sweep=order4,
        complement=list(record.complement), fallback_used=fallback_used, twisted_dim=twisted_dim,
    )


def faithful_section(record: FaithfulRecord) -> FaithfulSection:
    order_check = None
    if record.computed_order is not None:
        order_check = {"expected": record.expected_order, "computed": record.computed_order}
    return FaithfulSection(gcore_dim=record.gcore_dim, stabilizer_m_dim=record.stabilizer_m_dim,
                           faithful=record.faithful, argument=list(record.argument), order_check=order_check)


def replay_data(extension, tails, stabilizer_m, image_degree: int, section_values=None) -> ReplayData:
    """Replay block for an extension over a Carmichael-presented alternating group"""
    module = extension.module
    p = module.p
    g = extension.base.generators
    pairs = {}
    for a in range(len(g)):
        for b in range(len(g)):
            pairs[f"{a + 1},{b + 1}"] = dump_vector(extension.delta(g[a], g[b]), p)
    return ReplayData(
        presentation=extension.base.presentation.kind,
        n=extension.base.presentation.n,
        module_action=[dump_matrix(a, p) for a in module.action],
        tails=[dump_vector(t, p) for t in tails],
        stabilizer_m=dump_matrix(stabilizer_m.basis, p),
        image_degree=image_degree,
        cocycle_values=pairs,
        section_values=list(section_values or []),
    )
