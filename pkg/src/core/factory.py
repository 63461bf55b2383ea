"""
见证工厂

创建并缓存见证 DFA，供实验网格与 CLI 共享
"""
from threading import Lock
from typing import Dict, List, Optional, Tuple

from loguru import logger

from .automata import Dfa
from .witnesses import MINIMUMS, WitnessFamily, WitnessRole, WitnessSpec, witness

_CacheKey = Tuple[WitnessFamily, WitnessRole, Optional[int], Optional[int]]


class WitnessFactory:
    """见证工厂"""

    def __init__(self):
        self._cache: Dict[_CacheKey, Dfa] = {}
        self._lock = Lock()

    def create(self, family, role, m: Optional[int] = None, n: Optional[int] = None) -> Dfa:
        """
        创建见证 DFA

        Args:
            family: 见证族（枚举或其小写名称）
            role: pattern 或 text
            m: 模式参数
            n: 文本参数

        Returns:
            见证 DFA（相同参数返回同一个缓存对象）

        Raises:
            WitnessRangeError: 参数缺失或越界
        """
        spec = WitnessSpec(family=family, role=role, m=m, n=n)
        key = (spec.family, spec.role, spec.m, spec.n)

        with self._lock:
            if key in self._cache:
                logger.debug(f"从缓存获取见证: {spec.family.value}/{spec.role.value} m={m} n={n}")
                return self._cache[key]

        dfa = witness(spec)
        with self._lock:
            self._cache.setdefault(key, dfa)
        return dfa

    def pattern(self, family, m: int) -> Dfa:
        return self.create(family, WitnessRole.PATTERN, m=m)

    def text(self, family, m: Optional[int], n: int) -> Dfa:
        return self.create(family, WitnessRole.TEXT, m=m, n=n)

    @staticmethod
    def list_families() -> List[dict]:
        """列出所有见证族及其参数下限"""
        return [
            {'family': family.value, 'm_min': m_min, 'n_min': n_min}
            for family, (m_min, n_min) in MINIMUMS.items()
        ]
