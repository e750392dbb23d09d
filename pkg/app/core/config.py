from typing import Tuple, Type

from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables
    """
    # API configuration
    VERSION: str = "1.0.0"
    PROJECT_NAME: str = "Stable Cohomology API"
    CORS_ORIGINS: str = "*"
    LOG_LEVEL: str = "INFO"

    # Enumeration caps
    SET_PARTITION_CAP: int = 12  # Bell(12) = 4,213,597
    CHARACTER_CAP: int = 12

    # Brute-force oracle
    ORACLE_MAX_POINTS: int = 7
    ORACLE_BASIS_CAP: int = 200_000

    # Symmetric products
    MACDONALD_MAX_GENUS: int = 4
    MACDONALD_MAX_POINTS: int = 6

    # Series
    SERIES_DEGREE_FLOOR: int = -4096
    DEFAULT_MAX_DEGREE: int = 20

    # Stable range
    DEFAULT_POLICY: str = "ivanov"

    # Per-class trace computations
    MAX_WORKERS: int = 1

    model_config = SettingsConfigDict(env_file=".env", env_prefix="STABLECOH_", case_sensitive=True)


class PinnedSettings(Settings):
    """
    Settings that ignore the environment and `.env`: only explicit values count
    """
    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)


settings = Settings()


def pin_settings(**overrides) -> Settings:
    """
    Reset the process-wide settings to the built-in defaults plus overrides.

    The CLI calls this first so that its output never depends on the environment.
    """
    pinned = PinnedSettings(**overrides)
    for name in Settings.model_fields:
        setattr(settings, name, getattr(pinned, name))
    return settings
