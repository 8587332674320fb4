#!/usr/bin/env python3
"""Reports produced by the CLI, as sorted JSON or aligned text."""
import json
from dataclasses import dataclass, field as dc_field

from .cohomology import StrandReport

NOT_SPLIT_FLAG = 'inclusion R^G in R is not R^G-split'
STRAND_COLUMNS = ('k', 'dimV', 'dimW', 'rank_H', 'rank_fixed')


def derived_flags(a_invariant, n, order, characteristic):
    """With a = -n and p dividing |G| the transfer cannot split the inclusion."""
    if a_invariant is not None and a_invariant == -n and order % characteristic == 0:
        return [NOT_SPLIT_FLAG]
    return []


@dataclass
class Report:
    name: str
    field: str
    n: int
    command: str
    classification: dict = None
    invariant_hilbert: list = None
    generators: list = None
    relations: list = None
    strands: list = dc_field(default_factory=list)
    omega: dict = None
    a_invariant: int = None
    a_invariant_method: str = None
    flags: list = dc_field(default_factory=list)
    checks: dict = None
    notes: list = dc_field(default_factory=list)

    @property
    def passed(self):
        return all(self.checks.values()) if self.checks else True

    def to_dict(self):
        data = {
            'name': self.name,
            'field': self.field,
            'n': self.n,
            'command': self.command,
            'strands': [s.to_dict() for s in self.strands],
            'flags': list(self.flags),
            'notes': list(self.notes),
        }
        optional = {
            'classification': self.classification,
            'invariant_hilbert': self.invariant_hilbert,
            'generators': self.generators,
            'relations': self.relations,
            'omega': {str(j): r for j, r in self.omega.items()} if self.omega is not None else None,
            'a_invariant': self.a_invariant,
            'a_invariant_method': self.a_invariant_method,
            'checks': self.checks,
        }
        data.update({k: v for k, v in optional.items() if v is not None})
        return data

    @classmethod
    def from_dict(cls, data):
        omega = data.get('omega')
        return cls(
            name=data['name'],
            field=data['field'],
            n=data['n'],
            command=data['command'],
            classification=data.get('classification'),
            invariant_hilbert=data.get('invariant_hilbert'),
            generators=data.get('generators'),
            relations=data.get('relations'),
            strands=[StrandReport.from_dict(s) for s in data.get('strands', [])],
            omega={int(j): r for j, r in omega.items()} if omega is not None else None,
            a_invariant=data.get('a_invariant'),
            a_invariant_method=data.get('a_invariant_method'),
            flags=list(data.get('flags', [])),
            checks=data.get('checks'),
            notes=list(data.get('notes', [])),
        )

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def write_json(self, path):
        with open(path, 'w') as f:
            f.write(self.to_json() + '\n')

    def to_text(self):
        lines = [f"{self.name}: {self.command} over {self.field}, n = {self.n}"]
        if self.classification:
            c = self.classification
            lines.append(f"  order {c['order']}, in_SL {c['in_SL']}, modular {c['modular']}, "
                         f"cyclic {c['cyclic_generator'] is not None}")
            lines.append(f"  pseudoreflections {c['pseudoreflections']}, transvections {c['transvections']}")
        if self.invariant_hilbert is not None:
            lines.append(f"  invariant Hilbert function: {self.invariant_hilbert}")
        if self.generators is not None:
            lines.append("  generators up to degree "
                         f"{max((d for _, d in self.generators), default=0)}:")
            lines.extend(f"    [{d}] {g}" for g, d in self.generators)
        if self.relations is not None:
            lines.extend(f"  relation {r['relation']}: {'holds' if r['holds'] else 'FAILS'}" for r in self.relations)
        if self.strands:
            lines.append(_strand_table(self.strands))
        if self.a_invariant is not None:
            lines.append(f"  a-invariant {self.a_invariant} ({self.a_invariant_method})")
        lines.extend(f"  note: {flag}" for flag in self.flags)
        if self.checks:
            for name, ok in self.checks.items():
                lines.append(f"  {'PASS' if ok else 'FAIL'} {name}")
        lines.extend(f"  {note}" for note in self.notes)
        return '\n'.join(lines)


def _strand_table(strands):
    rows = [STRAND_COLUMNS]
    for s in strands:
        rank_H = s.marker if s.rank_H is None else s.rank_H
        rows.append((s.degree, s.dimV, s.dimW, rank_H, s.rank_fixed))
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(STRAND_COLUMNS))]
    return '\n'.join('  ' + '  '.join(str(v).rjust(w) for v, w in zip(row, widths)) for row in rows)
