from .profile_cache import ProfileCache, profile_key, cache_profile, load_profile, CACHE_DIR_ENV

__all__ = ['ProfileCache', 'profile_key', 'cache_profile', 'load_profile', 'CACHE_DIR_ENV']
