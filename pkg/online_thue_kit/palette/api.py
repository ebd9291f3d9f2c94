# -*- coding: utf-8 -*-

from .frozen import PALETTE_VERSION
from .frozen import ORDER_VERSION
from .frozen import VerificationKind
from .frozen import Verification
from .frozen import FrozenPalette
from .frozen import color_of
from .frozen import dumps_palette
from .frozen import loads_palette
from .frozen import save
from .frozen import load
from .precompute import exhaustive_horizon
from .precompute import offline_color
from .precompute import verify_sampled
from .precompute import verify_palette
from .precompute import precompute
from .precompute import reverify_palette
