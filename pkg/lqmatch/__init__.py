# Copyright (C) lqmatch contributors, see LICENSE for text of ISC license

"""lqmatch: matchings with lower quotas"""

__all__ = [
    'classic',
    'cli',
    'exception',
    'fpt',
    'gen',
    'instance',
    'kernel',
    'matching',
    'optimality',
    'oracle',
    'tokenizer',
    'version',
]
