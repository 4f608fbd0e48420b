"""
Annihilator identities relating the core, the images of regular forms and
bi-Lagrangian subspaces.
"""

import logging
from dataclasses import dataclass

from jkpencil.errors import RationalEigenvalueRequired, StructuralError
from jkpencil.pencilcore import INF, ProjParam, SkewPencil, eigenvalue_set, pencil_rank
from jkpencil.subspaces.calculus import (
    complement_at,
    core_subspace,
    is_bi_lagrangian,
    mantle_subspace,
    sample_parameters,
)
from jkpencil.subspaces.subspace import Subspace, intersect_all

logger = logging.getLogger(__name__)

_PROBE_PARAMETERS = (ProjParam.finite(0), ProjParam.finite(1), ProjParam.finite(-1), ProjParam.finite(2), INF)


@dataclass(frozen=True)
class AnnihilatorReport:
    core_annihilator: Subspace
    common_image: Subspace
    core_annihilator_is_common_image: bool
    lagrangian_annihilator_in_image: bool | None
    preimages_in_mantle: bool
    checked_parameters: tuple[ProjParam, ...]
    note: str = ""

    @property
    def passed(self) -> bool:
        return (self.core_annihilator_is_common_image
                and self.lagrangian_annihilator_in_image is not False
                and self.preimages_in_mantle)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "core_annihilator": self.core_annihilator.to_json(),
            "common_image": self.common_image.to_json(),
            "core_annihilator_is_common_image": self.core_annihilator_is_common_image,
            "lagrangian_annihilator_in_image": self.lagrangian_annihilator_in_image,
            "preimages_in_mantle": self.preimages_in_mantle,
            "checked_parameters": [str(p) for p in self.checked_parameters],
            "note": self.note,
        }


def _default_lagrangian(pencil: SkewPencil) -> Subspace | None:
    # reduction builds on subspaces, so the completion is imported on demand
    from jkpencil.reduction.completion import bilagrangian_completion

    try:
        return bilagrangian_completion(pencil, core_subspace(pencil)).result
    except RationalEigenvalueRequired:
        return None


def annihilator_checks(pencil: SkewPencil, lagrangian: Subspace | None = None) -> AnnihilatorReport:
    """Check K^0 = common image, L^0 inside it, and A_a^{-1}(K^0) inside the mantle."""
    n = pencil.n
    r = pencil_rank(pencil)
    core = core_subspace(pencil)
    mantle = mantle_subspace(pencil)
    core_annihilator = core.annihilator()
    # skew forms: column space equals row space
    images = [Subspace.span(n, pencil.at(p).entries) for p in sample_parameters(pencil, n + 1, r)]
    common_image = intersect_all(images, n)

    note = ""
    if lagrangian is None:
        lagrangian = _default_lagrangian(pencil)
        if lagrangian is None:
            note = "no bi-Lagrangian subspace available: non-rational eigenvalue"
    elif not is_bi_lagrangian(pencil, lagrangian):
        raise StructuralError("the supplied subspace is not bi-Lagrangian")
    lagrangian_ok = None if lagrangian is None else lagrangian.annihilator() <= common_image

    params = list(_PROBE_PARAMETERS)
    for eig in eigenvalue_set(pencil):
        if isinstance(eig, ProjParam):
            param = eig.negated()
            if param not in params:
                params.append(param)
    preimages_ok = all(complement_at(pencil, core, p) <= mantle for p in params)

    report = AnnihilatorReport(
        core_annihilator=core_annihilator,
        common_image=common_image,
        core_annihilator_is_common_image=core_annihilator == common_image,
        lagrangian_annihilator_in_image=lagrangian_ok,
        preimages_in_mantle=preimages_ok,
        checked_parameters=tuple(params),
        note=note,
    )
    logger.debug("annihilator checks passed: %s", report.passed)
    return report
