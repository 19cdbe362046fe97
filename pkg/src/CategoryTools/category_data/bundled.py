import os
from pathlib import Path
from typing import List

CATEGORY_DATA_PATH = os.path.join(str(Path(__file__).absolute().parent), 'data')


def bundled_names() -> List[str]:
    return sorted(name[:-5] for name in os.listdir(CATEGORY_DATA_PATH) if name.endswith('.json'))


def bundled_path(name: str) -> str | None:
    """
    Path of the bundled document with the given name ('finset2' or
    'finset2.json'), or None if there is no such document.
    """
    name = os.path.basename(name)
    if not name.endswith('.json'):
        name = f'{name}.json'
    path = os.path.join(CATEGORY_DATA_PATH, name)
    return path if os.path.isfile(path) else None
