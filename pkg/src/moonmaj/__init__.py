"""Major index and NE chains for 01-fillings of moon polyominoes."""
from __future__ import annotations

from .encode import (ArcDiagram, crossings, des_word, filling_to_word, foata_word, inv_word,
                     maj_word, nestings, partition_to_filling, pmaj, word_to_filling)
from .filling import (Filling, FillingClassSpec, FillingError, des_rect, enumerate_fillings,
                      h_vector, maj, maj_columns, maj_maxrect, maj_rect, maj_top_stack,
                      ne_count)
from .foata import compute_regions, delta_r, gamma_r, phi, phi_inverse, swap_cells
from .genfun import (check_column_permutation_invariance, insertion_multiset,
                     maj_distribution, ne_distribution, product_formula)
from .qpoly import QPoly, qbinomial, qmultinomial
from .rearrange import alpha, f, f_inverse, g, g_inverse, psi, psi_inverse, tau, tau_inverse
from .shape import (MoonPolyomino, Rect, ShapeError, WrongShapeClass, column_order,
                    column_rectangles, maximal_rectangles, validate)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
