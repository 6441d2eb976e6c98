"""Computational caps for the counting engine, overridable via HURWITZ_BUDGET."""

import json
import os

DEFAULTS = {
    'max_n': 7,            # ground set size for the dynamic program
    'max_k': 12,           # number of cycle factors per tuple
    'max_N': 8,            # series truncation order
    'max_table_weight': 8, # block weight for brute-forced operator tables
    'enum_budget': 2000000, # candidate tuples for direct enumeration
}


class BudgetError(Exception):
    """A request went past one of the caps."""

    def __init__(self, name, cap, requested):
        super().__init__('%s: requested %s exceeds cap %s' % (name, requested, cap))
        self.name = name
        self.cap = cap
        self.requested = requested


def caps():
    """Active caps: the defaults updated from the HURWITZ_BUDGET variable.

    The variable may hold a JSON object literal or a path to a JSON file.
    """
    out = dict(DEFAULTS)
    raw = os.environ.get('HURWITZ_BUDGET', '').strip()
    if raw:
        if raw.startswith('{'):
            out.update(json.loads(raw))
        else:
            with open(raw) as fh:
                out.update(json.load(fh))
    return out


def require(name, requested):
    """Raise BudgetError when requested exceeds the named cap."""
    cap = caps()[name]
    if requested > cap:
        raise BudgetError(name, cap, requested)
