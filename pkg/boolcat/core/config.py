"""
Configuration settings for the boolcat enumeration engine
"""
import os
from functools import lru_cache

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Engine settings"""

    # Logging
    log_level: str = "WARNING"
    slow_row_seconds: float = 30.0

    # Count cache (JSON file, decimal-string values)
    cache_path: str = ".boolcat_cache.json"

    # Brute force limits over S_n
    brute_set_limit: int = 10
    brute_count_limit: int = 11
    brute_override_limit: int = 12
    brute_prefix_length: int = 1

    # Worker pool
    default_workers: int = max(1, os.cpu_count() or 1)

    # Constructive generation
    constructive_memo_cap: int = 9
    constructive_limit: int = 12

    # 0-1-trees
    tree_list_limit: int = 10
    tree_generation_limit: int = 12

    class Config:
        env_file = ".env"
        env_prefix = "BOOLCAT_"


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()
