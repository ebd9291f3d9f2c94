# -*- coding: utf-8 -*-

from .schema import Base
from .schema import CorpusRecord
from .schema import t_corpus
from .executor import get_pk_name
from .executor import clone_temp_table
from .executor import InsertOrReplaceExecutor
from .executor import insert_or_replace
from .results import ResultStore
