'''Verification results and their JSON and plain text serializations.

JSON field names:
  schemaVersion, overallPass, parameters, notes, checks[] with
  checkId, anchor, population, passCount, failCount, hypothesisCount,
  witnesses[], tightCases[].
'''
from dataclasses import dataclass, field
from typing import List
import json

SCHEMA_VERSION = 1
MAX_WITNESSES = 10
MAX_TIGHT_CASES = 10

@dataclass
class CheckResult:
    check_id: str
    anchor: str
    population: str
    pass_count: int = 0
    fail_count: int = 0
    hypothesis_count: int = 0
    witnesses: List[str] = field(default_factory=list)
    tight_cases: List[str] = field(default_factory=list)

    @property
    def passed(self):
        return self.fail_count == 0

    def to_dict(self):
        return {
            'checkId': self.check_id,
            'anchor': self.anchor,
            'population': self.population,
            'passCount': self.pass_count,
            'failCount': self.fail_count,
            'hypothesisCount': self.hypothesis_count,
            'witnesses': list(self.witnesses),
            'tightCases': list(self.tight_cases),
        }

class Tally:
    '''Accumulates the cases of one check into a CheckResult.'''

    def __init__(self, check_id, anchor, population):
        self.result = CheckResult(check_id, anchor, population)

    def hypothesis(self, count=1):
        self.result.hypothesis_count += count

    def record(self, ok, subject, detail=''):
        if ok:
            self.result.pass_count += 1
            return True
        self.result.fail_count += 1
        if len(self.result.witnesses) < MAX_WITNESSES:
            self.result.witnesses.append(f'{subject}: {detail}' if detail else subject)
        return False

    def tight(self, subject):
        if len(self.result.tight_cases) < MAX_TIGHT_CASES and subject not in self.result.tight_cases:
            self.result.tight_cases.append(subject)

@dataclass
class VerificationReport:
    checks: List[CheckResult]
    parameters: dict = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    @property
    def overall_pass(self):
        return all(check.passed for check in self.checks)

    @property
    def failed(self):
        return [check for check in self.checks if not check.passed]

    def to_dict(self):
        return {
            'schemaVersion': self.schema_version,
            'overallPass': self.overall_pass,
            'parameters': dict(self.parameters),
            'notes': list(self.notes),
            'checks': [check.to_dict() for check in self.checks],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + '\n'

    def to_text(self):
        width = max([len('check')] + [len(check.check_id) for check in self.checks])
        lines = [f'{"check":<{width}}  {"result":<6}  {"pass":>6}  {"fail":>5}  {"hyp":>5}  population']
        for check in self.checks:
            status = 'ok' if check.passed else 'FAIL'
            lines.append(
                f'{check.check_id:<{width}}  {status:<6}  {check.pass_count:>6}  {check.fail_count:>5}  '
                f'{check.hypothesis_count:>5}  {check.population}')
            for witness in check.witnesses:
                lines.append(f'{"":<{width}}  witness: {witness}')
        lines.extend(f'note: {note}' for note in self.notes)
        passed = sum(1 for check in self.checks if check.passed)
        lines.append(f'{passed}/{len(self.checks)} checks passed; overall {"PASS" if self.overall_pass else "FAIL"}')
        return '\n'.join(lines) + '\n'
