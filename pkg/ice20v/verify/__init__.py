from ice20v.verify.core import SuiteRunner
from ice20v.verify.model import Check, CheckResult, Outcome, SuiteReport, SuiteType
from ice20v.verify.suites import SUITE_CAPS, SUITES, build_checks
