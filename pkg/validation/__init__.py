from .oracle_suite import OracleValidator, OracleCheckResult, evaluate_oracle_agreement, BENCHMARK_SETS

__all__ = ['OracleValidator', 'OracleCheckResult', 'evaluate_oracle_agreement', 'BENCHMARK_SETS']
