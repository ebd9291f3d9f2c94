# -*- coding: utf-8 -*-

from .session import FrozenOracle
from .session import LazyOracle
from .session import Oracle
from .session import SessionConfig
from .session import Trace
from .session import Session
from .session import replay
