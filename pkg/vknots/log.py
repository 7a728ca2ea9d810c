import logging

FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def attach_handler(logger: logging.Logger, level_name: str, default=logging.INFO) -> None:
    """Give ``logger`` its own stream handler at ``level_name``.

    Uvicorn owns the root configuration, so records stop here.
    """
    level = getattr(logging, level_name.upper(), default)
    logger.setLevel(level)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(fmt=FORMAT, datefmt=DATE_FORMAT))
        logger.addHandler(handler)
        logger.propagate = False
    for handler in logger.handlers:
        handler.setLevel(level)
