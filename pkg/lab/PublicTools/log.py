import os
import sys
from loguru import logger as _logger

from .settings import LOG_LEVELS, get_settings


_CONSOLE_FORMAT = "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <level>{message}</level>"
_FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {message}"


def _configure(level: str) -> None:
    # 移除已有的 handler（包括默认 handler）
    _logger.remove()

    record_dir = get_settings().record_dir
    if not os.path.exists(record_dir):
        os.makedirs(record_dir)

    # 控制台输出
    _logger.add(
        sys.stderr,
        format=_CONSOLE_FORMAT,
        level=level.upper(),
        colorize=True
    )

    # 文件输出，始终记录到 DEBUG
    _logger.add(
        os.path.join(record_dir, "{time:YYYY-MM-DD}.log"),
        format=_FILE_FORMAT,
        level="DEBUG",
        rotation="00:00",  # 每天午夜轮转
        retention="30 days",
        encoding="utf-8",
        enqueue=True,
        compression="zip"
    )


def set_level(level: str) -> None:
    """
    运行时切换控制台日志级别

    参数:
        level: error / info / debug
    """
    level = str(level).strip().lower()
    if level not in LOG_LEVELS:
        _logger.warning(f"未知日志级别 {level!r}，使用 info")
        level = "info"
    _configure(level)


_raw_level = os.environ.get("QLC_LOG", "info").strip().lower()
_configure(get_settings().log)
if _raw_level not in LOG_LEVELS:
    _logger.warning(f"QLC_LOG={_raw_level!r} 无效，使用 info")

# 导出 logger 实例
logger = _logger

# 使用示例
# from PublicTools import logger
# logger.info("扫描开始")
# logger.debug(f"h={h}, M={value}")
