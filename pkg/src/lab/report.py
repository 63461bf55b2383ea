"""
实验报告

ComplexityReport 与 SearchReport，可序列化为 JSON / CSV 并可读回。
"""
import csv
import io
import json
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from ..core.witnesses import WitnessFamily

CSV_COLUMNS = ('family', 'm', 'n', 'measured', 'formula', 'tight', 'elapsed_ms')


class GridRow(BaseModel):
    """网格中的一格；失败（超时/异常）时 measured 为空、tight 为 False"""
    m: int
    n: int
    measured: Optional[int] = None
    formula: int
    tight: bool = False
    elapsed_ms: float = 0.0
    error: Optional[str] = None

    @model_validator(mode='after')
    def _tight_matches(self):
        expected = self.measured is not None and self.measured == self.formula
        if self.tight != expected:
            raise ValueError(f"tight={self.tight} 与 measured={self.measured}, formula={self.formula} 不符")
        return self

    @property
    def failed(self) -> bool:
        return self.measured is None


class ComplexityReport(BaseModel):
    """一个见证族在 (m, n) 网格上的实测结果"""
    family: WitnessFamily
    rows: List[GridRow] = Field(default_factory=list)
    meta: Dict[str, Any] = Field(default_factory=dict)

    @property
    def all_tight(self) -> bool:
        return all(row.tight for row in self.rows)

    @property
    def failed_rows(self) -> List[GridRow]:
        return [row for row in self.rows if row.failed]

    def to_dict(self) -> Dict[str, Any]:
        rows = []
        for row in self.rows:
            item = row.model_dump(exclude={'error'})
            if row.error is not None:
                item['error'] = row.error
            rows.append(item)
        return {'family': self.family.value, 'rows': rows, 'meta': self.meta}

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> 'ComplexityReport':
        return cls.model_validate(json.loads(text))

    def csv_rows(self) -> List[Tuple]:
        return [
            (self.family.value, row.m, row.n,
             '' if row.measured is None else row.measured,
             row.formula, str(row.tight).lower(), f"{row.elapsed_ms:.3f}")
            for row in self.rows
        ]


def reports_to_csv(reports: List[ComplexityReport]) -> str:
    """固定列序 family,m,n,measured,formula,tight,elapsed_ms"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for report in reports:
        writer.writerows(report.csv_rows())
    return buffer.getvalue()


def reports_from_csv(text: str) -> List[ComplexityReport]:
    """按 family 分组读回报告（meta 不在 CSV 中）"""
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
        raise ValueError(f"CSV 列不符: {reader.fieldnames}")
    grouped: Dict[str, List[GridRow]] = {}
    for record in reader:
        measured = record['measured']
        grouped.setdefault(record['family'], []).append(GridRow(
            m=int(record['m']),
            n=int(record['n']),
            measured=int(measured) if measured else None,
            formula=int(record['formula']),
            tight=record['tight'] == 'true',
            elapsed_ms=float(record['elapsed_ms']),
            error=None if measured else 'failed',
        ))
    return [ComplexityReport(family=family, rows=rows) for family, rows in grouped.items()]


class SearchReport(BaseModel):
    """小字母表上 (Σ*⧢P)∩T 状态复杂度的搜索结果"""
    m: int
    n: int
    alphabet_size: int
    samples_tried: int
    best_kappa_found: int
    bound: int
    seed: Optional[int] = None
    exhaustive: bool = False
    pattern_space: int = 0
    text_space: int = 0
    best_pair: Optional[Tuple[str, str]] = None
    counterexample: Optional[Tuple[str, str]] = None
    elapsed_ms: float = 0.0

    @model_validator(mode='after')
    def _counterexample_iff_bound_reached(self):
        reached = self.best_kappa_found >= self.bound
        if reached != (self.counterexample is not None):
            raise ValueError("counterexample 必须且只能在达到上界时给出")
        return self

    def to_json(self, indent: Optional[int] = 2) -> str:
        return self.model_dump_json(indent=indent)

    @classmethod
    def from_json(cls, text: str) -> 'SearchReport':
        return cls.model_validate_json(text)
