"""
Running a scenario from a TOML file
===================================

The same file can be passed to ``paritykick run --config``.
"""

from pathlib import Path

from paritykick.experiments import run_scenario
from paritykick.experiments.config import load_scenario
from paritykick.experiments.io import report_csv

scenario = load_scenario(Path(__file__).with_name("scenario.toml"))
report = run_scenario(scenario)
print("resolved kick:", report.kick)
print("controlled CV range:", report.summary["controlled"]["cv"])
print(report_csv(report).splitlines()[0])
