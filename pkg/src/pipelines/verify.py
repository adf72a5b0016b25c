"""
Verify Module
Replays the linear-algebra checks of a certificate from its stored data
"""
import logging
import math
from pathlib import Path
from typing import Dict, List

from pydantic import BaseModel, Field

from src.cohomology.fox import complement_system
from src.config import ORDER_CHECK_MAX_DEGREE
from src.groups.named_groups import presentation_group
from src.groups.perm_group import PermGroup
from src.groups.permutation import Permutation
from src.groups.presentations import presentation_of
from src.linalg.matrix_io import load_matrix, load_vector
from src.linalg.subspace import Subspace
from src.modules.gmodule import GModule
from src.modules.hom import g_core
from src.pipelines.certificate import Certificate

logger = logging.getLogger(__name__)


class VerifyReport(BaseModel):
    construction: str
    checks: Dict[str, bool] = Field(default_factory=dict)
    details: Dict[str, str] = Field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    @property
    def failed(self) -> List[str]:
        return [name for name, passed in self.checks.items() if not passed]

    def record(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks[name] = bool(passed)
        if detail:
            self.details[name] = detail
        if not passed:
            logger.warning("Replay check %s failed: %s", name, detail or "-")
        return bool(passed)


def closed_form_degree(cert: Certificate) -> int:
    c = cert.construction
    if c.kind == "even":
        return 2 * c.k * (c.k - 1)
    return c.p * c.k * (c.k - 1) // 2


def verify_certificate(cert: Certificate) -> VerifyReport:
    """
    Re-check a certificate without the cocycle or the random choices behind it.

    Rebuilds the base presentation, loads the module action and relator tails,
    re-solves the complement system, recomputes the G-core of the stabilizer's
    M-part and re-parses the generator images for degree, transitivity and
    (for small degrees) the order of the image.
    """
    c = cert.construction
    replay = cert.replay
    report = VerifyReport(construction=f"{c.kind} k={c.k} p={c.p}")

    presentation = presentation_of(replay.presentation, replay.n)
    group = presentation_group(presentation)
    matrices = [load_matrix(text) for text in replay.module_action]
    if any(p != c.p for p, _ in matrices) or len(matrices) != group.ngens:
        report.record("module_action", False, f"{len(matrices)} matrices for {group.ngens} generators")
        return report
    dim = matrices[0][1].shape[0] if matrices else cert.module.dim
    module = GModule(c.p, group, [m for _, m in matrices], dim=dim, name="M")
    failing = module.failing_relators()
    report.record("relators", not failing, f"{len(failing)} relators act nontrivially" if failing else "")

    tails = [load_vector(text) for text in replay.tails]
    shapes_ok = len(tails) == len(presentation.relators) and all(t.shape[0] == dim for t in tails)
    if not report.record("tails", shapes_ok, f"{len(tails)} tails for {len(presentation.relators)} relators"):
        return report
    system = complement_system(group, module, tails)
    stored = cert.nonsplit.system_dims
    dims_match = (system.unknowns, system.equations, system.rank) == (
        stored.get("unknowns"), stored.get("equations"), stored.get("rank"))
    report.record("complement_system", dims_match and system.feasible == cert.nonsplit.feasible,
                  f"unknowns {system.unknowns}, equations {system.equations}, rank {system.rank}, "
                  f"feasible {system.feasible}")
    report.record("nonsplit", not system.feasible or not cert.nonsplit.nonsplit)

    _, basis = load_matrix(replay.stabilizer_m)
    stabilizer = Subspace.span(c.p, dim, basis) if basis.shape[0] else Subspace.zero(c.p, dim)
    core = g_core(module, stabilizer)
    report.record("gcore", core.dim == cert.faithful.gcore_dim and (core.dim == 0 or not cert.faithful.faithful),
                  f"G-core dim {core.dim}, stabilizer dim {stabilizer.dim}")

    degree = replay.image_degree
    closed_form = closed_form_degree(cert)
    report.record("degree", degree == closed_form == cert.degrees.get("action"),
                  f"image degree {degree}, closed form {closed_form}")
    images = [Permutation.parse(text, degree) for text in cert.generator_images]
    image = PermGroup(images, degree=degree, name="image")
    transitive = image.is_transitive()
    report.record("transitive", transitive == cert.transitive and transitive)
    if degree <= ORDER_CHECK_MAX_DEGREE and cert.faithful.faithful:
        expected = c.p ** dim * (math.factorial(c.k) // 2)
        computed = image.order()
        report.record("order", computed == expected, f"computed {computed}, expected {expected}")

    report.record("positive", cert.positive, "transitive, nonsplit and faithful as claimed")
    logger.info("Replay %s: %d checks, %s", report.construction, len(report.checks),
                "all passed" if report.ok else f"failed {report.failed}")
    return report


def verify_certificate_file(path: Path) -> VerifyReport:
    return verify_certificate(Certificate.read(Path(path)))
