"""blobkl public API surface.

- Algebra: ``LaurentPoly``, ``AffineElement``, ``bott_samelson``,
  ``kl_table``, ``pkl_dihedral``.
- Blob combinatorics: ``BlobParams``, ``OneColMultipartition``,
  ``graded_cell_dim``, ``principal_word``, ``blob_graded_decomposition``.
- Command layer: ``CommandRouter``, ``CommandSet``, ``command``.

Importing the package registers the built-in ``logging`` and ``pydantic``
plugins with ``CommandRouter``; nothing else runs at import time.
"""

from importlib import import_module

__version__ = "0.1.0"

from .affine_weyl import AffineElement, DihedralForm, parse_element, parse_word
from .alcove import principal_word, w_of
from .blob_comb import BlobParams, ColumnTableau, OneColMultipartition, graded_cell_dim
from .commands import CommandRouter, CommandSet, command
from .dihedral_blob import blob_graded_decomposition
from .errors import BlobKLError, ConsistencyError, InputError
from .hecke import bott_samelson, kl_table, pkl_dihedral
from .laurent import LaurentPoly

for _plugin in ("logging", "pydantic"):
    import_module(f"{__name__}.plugins.{_plugin}")
del _plugin

__all__ = [
    "AffineElement",
    "BlobKLError",
    "BlobParams",
    "ColumnTableau",
    "CommandRouter",
    "CommandSet",
    "ConsistencyError",
    "DihedralForm",
    "InputError",
    "LaurentPoly",
    "OneColMultipartition",
    "blob_graded_decomposition",
    "bott_samelson",
    "command",
    "graded_cell_dim",
    "kl_table",
    "parse_element",
    "parse_word",
    "pkl_dihedral",
    "principal_word",
    "w_of",
]
