"""
Verification reports: one Check per asserted identity or reported probe,
grouped per suite, plus the banner/summary text blocks the CLI prints.
"""
from dataclasses import dataclass, field
from typing import Any, Optional

RULE = '═══════════════════════════════════════════════════'


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ''
    witness: Optional[Any] = None
    # probes are printed but never fail a run
    asserted: bool = True


def probe(name, ok, detail=''):
    return Check(name, ok, detail, asserted=False)


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def failures(self):
        return [c for c in self.checks if c.asserted and not c.ok]

    @property
    def ok(self):
        return not self.failures


def banner(title):
    return [RULE, f'  {title}', RULE]


def render_text(report):
    lines = banner(f'verify {report.suite}')
    for check in report.checks:
        if check.asserted:
            icon = '✓' if check.ok else '✗'
        else:
            icon = '·'
        line = f'  {icon} {check.name}'
        if check.detail:
            line += f': {check.detail}'
        lines.append(line)
        if not check.ok and check.witness is not None:
            lines.append(f'      witness: {check.witness}')
    lines.append('')
    asserted = [c for c in report.checks if c.asserted]
    lines.append(f'  {len(asserted) - len(report.failures)}/{len(asserted)} checks passed, '
                 f'{len(report.checks) - len(asserted)} reported')
    lines.append(RULE)
    return lines
