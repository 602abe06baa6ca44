"""Utility module for reading resources."""

import json
from importlib import resources
from typing import Any, Dict


class Resources:
    """Utility class for reading resources."""

    __RESOURCES_PACKAGE = "seqrsp.resources"
    __PUBLISHED_TABLES_RESOURCE = "published_tables.json"

    __PUBLISHED_TABLES = None

    @staticmethod
    def get_published_tables() -> Dict[str, Any]:
        """
        Get the published tables resource.

        :return: Dict with the table selectors ('I', 'II', 'III', 'IV', 'B') as keys. Each value is a
        Dict with a 'caption' and a list of 'rows'. Rows of the sharpness tables carry 'i' and
        'lambda_min'; rows of the boundary tables carry 'n' and a list of 'intervals', each given as
        [lower, upper, lower_open, upper_open].
        """
        if Resources.__PUBLISHED_TABLES is None:
            Resources.__PUBLISHED_TABLES = Resources.read_json(Resources.__PUBLISHED_TABLES_RESOURCE)
        return Resources.__PUBLISHED_TABLES

    @staticmethod
    def read_json(file: str) -> Any:
        """
        Read a JSON document shipped in the resource package.

        :param file: File name of the document in the resource package.
        :return: Deserialized object.
        """
        with resources.files(Resources.__RESOURCES_PACKAGE).joinpath(file).open("r", encoding="utf-8") as stream:
            return json.load(stream)
