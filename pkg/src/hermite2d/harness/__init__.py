from .config import CampaignConfig, SuiteConfig, load_config, parse_config
from .runner import CheckRecord, run_campaign
from .suites import CATALOG, list_suites

__all__ = ["CATALOG", "CampaignConfig", "CheckRecord", "SuiteConfig", "list_suites",
           "load_config", "parse_config", "run_campaign"]
