"""Finite order-theory workbench: lexicographic codes, embeddings, barriers, regular trees and Menger waves."""

from ._core import *  # noqa: F401,F403
from ._core import OrdworkError  # noqa: F401
