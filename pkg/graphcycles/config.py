import os
from pathlib import Path

from dotenv import load_dotenv


BASE_DIR = Path(__file__).resolve().parent.parent
load_dotenv(BASE_DIR / ".env")


class Config:
    def __init__(self) -> None:
        self.LOG_LEVEL = os.getenv("GRAPHCYCLES_LOG_LEVEL", "INFO").upper()
        self.THREADS = max(1, int(os.getenv("GRAPHCYCLES_THREADS", "1")))
        self.MAX_RESTARTS = int(os.getenv("GRAPHCYCLES_MAX_RESTARTS", "10000"))
        self.MAX_REJECTIONS = int(os.getenv("GRAPHCYCLES_MAX_REJECTIONS", "1000"))
        self.DEFAULT_SEED = int(os.getenv("GRAPHCYCLES_SEED", "1"))

        # Desk-scale experiment (minutes)
        self.DESK_N = int(os.getenv("GRAPHCYCLES_DESK_N", "2000"))
        self.DESK_GRAPHS = int(os.getenv("GRAPHCYCLES_DESK_GRAPHS", "50"))
        self.DESK_NODES = int(os.getenv("GRAPHCYCLES_DESK_NODES", "40"))
        self.DESK_KMAX = int(os.getenv("GRAPHCYCLES_DESK_KMAX", "14"))

        # Full-scale experiment (hours)
        self.FULL_N = 64000
        self.FULL_LDPC_N = 63000
        self.FULL_GRAPHS = 200
        self.FULL_NODES = 100
        self.FULL_KMAX = 20

    def __call__(self) -> "Config":
        return self
