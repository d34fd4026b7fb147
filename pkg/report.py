#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
验证记录 - 结构化记录每个套件的检查结果
=======================================

按计划顺序保存结果, 每个套件的第一个失败就是它的最小反例。
"""

import json
from collections import OrderedDict
from typing import Dict, List, Optional

from checks.suites import CheckResult


class VerificationReport:
    """一次 verify 运行的全部检查结果"""

    def __init__(self, suite: str, bounds: Dict[str, int]):
        self.data = {
            "suite": suite,
            "bounds": dict(bounds),
            "suites": OrderedDict(),
        }

    def add_result(self, result: CheckResult):
        """按计划顺序追加一条结果"""
        entry = self.data["suites"].setdefault(result.suite, {"checked": 0, "failed": []})
        entry["checked"] += 1
        if not result.passed:
            entry["failed"].append({"label": result.label, "detail": result.detail})

    def extend(self, results: List[CheckResult]):
        for result in results:
            self.add_result(result)

    @property
    def passed(self) -> bool:
        return all(not entry["failed"] for entry in self.data["suites"].values())

    @property
    def total(self) -> int:
        return sum(entry["checked"] for entry in self.data["suites"].values())

    def minimal_counterexample(self, suite: str) -> Optional[Dict[str, str]]:
        entry = self.data["suites"].get(suite)
        if not entry or not entry["failed"]:
            return None
        return entry["failed"][0]

    def to_text(self) -> str:
        lines = [
            "=" * 60,
            f"验证套件: {self.data['suite']}",
            "上界: " + ", ".join(f"{k}={v}" for k, v in self.data["bounds"].items()),
            "=" * 60,
        ]
        for name, entry in self.data["suites"].items():
            failures = len(entry["failed"])
            status = "通过" if not failures else f"失败 {failures}"
            lines.append(f"{name:<10} 检查 {entry['checked']:>5}  {status}")
            example = self.minimal_counterexample(name)
            if example:
                lines.append(f"  最小反例 [{example['label']}] {example['detail']}")
        lines.extend(["-" * 60, f"结果: {'PASS' if self.passed else 'FAIL'} ({self.total} 项检查)"])
        return "\n".join(lines)

    def to_json(self) -> str:
        document = {
            "suite": self.data["suite"],
            "bounds": self.data["bounds"],
            "passed": self.passed,
            "suites": [
                {"name": name, "checked": entry["checked"], "passed": not entry["failed"],
                 "counterexample": self.minimal_counterexample(name)}
                for name, entry in self.data["suites"].items()
            ],
        }
        return json.dumps(document, ensure_ascii=False, indent=2)

    def to_csv_rows(self) -> List[List[str]]:
        rows = [["suite", "checked", "passed", "counterexample"]]
        for name, entry in self.data["suites"].items():
            example = self.minimal_counterexample(name)
            rows.append([name, str(entry["checked"]), "1" if not entry["failed"] else "0",
                         example["label"] if example else ""])
        return rows
