from typing import Optional

from pydantic import BaseSettings


class Settings(BaseSettings):
    app_name: str = "aluffi-kit"

    # default for --jobs, overridden by ALUFFI_KIT_JOBS
    jobs: int = 1

    # Buchberger resource guard, tuned for n <= 4 and degree <= 6
    limit_pairs: int = 50000
    limit_terms: int = 2000000

    # seconds per batch item; None runs single-job batches inline without a limit
    trial_timeout: Optional[float] = 300.0

    family_a_max: int = 6
    family_b_max: int = 6

    cubic_trials: int = 20
    cubic_seed: int = 0
    cubic_coefficient_bound: int = 3

    nodal_quartics: int = 5
    corpus_seed: int = 1729

    class Config:
        env_file = ".env"
        env_prefix = "ALUFFI_KIT_"


settings = Settings()
