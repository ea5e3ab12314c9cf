from src.cli.commands import compare, evaluate, regions, turning_points, verify

__all__ = ["compare", "evaluate", "regions", "turning_points", "verify"]
