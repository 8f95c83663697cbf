from .resources import check_disk_usage, check_memory_usage, process_snapshot, estimate_grid_memory

__all__ = ['check_disk_usage', 'check_memory_usage', 'process_snapshot', 'estimate_grid_memory']
