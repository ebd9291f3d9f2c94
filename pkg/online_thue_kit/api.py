# -*- coding: utf-8 -*-

from . import sequences
from .graph import api as graph
from .repetition import api as repetition
from .universal import api as universal
from .palette import api as palette
from .engine import api as engine
from .adversary import api as adversary
from .listgame import api as listgame
from .store import api as store
from .config import Config
