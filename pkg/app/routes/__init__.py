##app/routes/__init__.py

from .hypergraphs import router as hypergraphs_router
from .coefficients import router as coefficients_router
from .simplex import router as simplex_router
from .veblen import router as veblen_router
from .polynomial import router as polynomial_router
from .presets import router as presets_router
