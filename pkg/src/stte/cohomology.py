"""Integer 3-cohomology ``ker d3 / im d2`` of the tetrahedral complex of a solution."""

from __future__ import annotations

from dataclasses import dataclass

from .cubecomplex import boundary3_matrix, boundary4_matrix
from .intlinalg import (
    AbelianGroup,
    Lattice,
    image_lattice,
    kernel_lattice,
    lattice_sum,
    quotient,
)
from .rmap import RMap, satisfies_stte

__all__ = ["CohomologyReport", "V1", "cohomology3", "verify_statement"]

V1 = (1,) * 8


@dataclass(frozen=True)
class CohomologyReport:
    code: int
    kernel: Lattice
    image: Lattice
    h3: AbelianGroup
    h3_reduced: AbelianGroup
    nontrivial: bool

    @property
    def ker_rank(self) -> int:
        return self.kernel.rank

    @property
    def im_generator(self) -> tuple[int, ...]:
        """Generator of the image (first nonzero entry positive), zeros if trivial."""
        return self.image.generator() or (0,) * 8


def cohomology3(R: RMap) -> CohomologyReport:
    if not satisfies_stte(R):
        raise ValueError(f"{R} does not satisfy the tetrahedron equation")
    kernel = kernel_lattice(boundary4_matrix(R))
    image = image_lattice(boundary3_matrix(R))
    trivial_part = lattice_sum(image, Lattice.span([V1], 8))
    return CohomologyReport(
        code=R.code,
        kernel=kernel,
        image=image,
        h3=quotient(kernel, image),
        h3_reduced=quotient(kernel, trivial_part),
        nontrivial=kernel != trivial_part,
    )


def verify_statement(R: RMap) -> bool:
    """The image of d2 has rank below the number of colors (here: at most 1)."""
    return image_lattice(boundary3_matrix(R)).rank <= 1
