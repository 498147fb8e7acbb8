"""pronaudit: bilingual pronoun bias auditing and placeholder rewriting."""

__version__ = "0.1.0"

from ._kernel import BACKEND as KERNEL_BACKEND  # noqa: F401
