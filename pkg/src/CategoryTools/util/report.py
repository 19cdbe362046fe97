from typing import Dict, List, Sequence

from monty.json import MSONable

from CategoryTools.util.helper import jsonable


class LawReport(MSONable):
    """
    The outcome of a law check or query.

    A report is either a leaf (one law) or a composite whose status is derived
    from its children. A failing report always carries at least one witness, and
    the witnesses are the inputs needed to replay the violation through the
    library.

    Args:
        name (str): Name of the law or query, e.g. 'associativity'.
        status (str): One of 'pass', 'fail' or 'error'.
        witnesses (dict): Named morphisms, objects or values explaining the verdict.
        checked (int): Number of instances that were checked.
        message (str): Human readable summary.
        children (list): Sub-reports, in the order they were checked.
    """

    PASS = 'pass'
    FAIL = 'fail'
    ERROR = 'error'
    STATUSES = (PASS, FAIL, ERROR)

    def __init__(self,
                 name: str,
                 status: str,
                 witnesses: Dict | None = None,
                 checked: int = 0,
                 message: str = '',
                 children: List['LawReport'] | None = None):
        if status not in self.STATUSES:
            raise ValueError(f'Unknown report status {status}')
        if witnesses is None:
            witnesses = {}
        if children is None:
            children = []
        if status == self.FAIL and not witnesses:
            raise ValueError(f'Failing report {name} must carry a witness')

        self.name = name
        self.status = status
        self.witnesses = jsonable(witnesses)
        self.checked = checked
        self.message = message
        self.children = list(children)

    @classmethod
    def success(cls, name: str, checked: int = 0, message: str = '', **witnesses):
        return cls(name, cls.PASS, witnesses, checked, message)

    @classmethod
    def failure(cls, name: str, witnesses: Dict, checked: int = 0, message: str = ''):
        return cls(name, cls.FAIL, witnesses, checked, message)

    @classmethod
    def error(cls, name: str, message: str, **witnesses):
        return cls(name, cls.ERROR, witnesses, 0, message)

    @classmethod
    def combine(cls,
                name: str,
                children: Sequence['LawReport'],
                message: str = '') -> 'LawReport':
        """
        Build a composite report. The status is 'error' if any child errored,
        otherwise 'fail' if any child failed, otherwise 'pass'. The witnesses of
        the first non-passing child are lifted to the composite.
        """
        children = list(children)
        checked = sum(child.checked for child in children)
        for status in (cls.ERROR, cls.FAIL):
            for child in children:
                if child.status == status:
                    witnesses = dict(child.witnesses)
                    witnesses.setdefault('law', child.name)
                    return cls(name,
                               status,
                               witnesses,
                               checked,
                               child.message or message,
                               children)
        return cls(name, cls.PASS, {}, checked, message, children)

    @property
    def passed(self) -> bool:
        return self.status == self.PASS

    def child(self, name: str) -> 'LawReport':
        for child in self.children:
            if child.name == name:
                return child
        raise KeyError(name)

    def to_document(self) -> dict:
        """
        Plain JSON document of this report, without the monty class markers.
        """
        return {
            'name': self.name,
            'status': self.status,
            'checked': self.checked,
            'message': self.message,
            'witnesses': self.witnesses,
            'children': [child.to_document() for child in self.children]
        }

    def to_text(self, indent: int = 0) -> str:
        pad = '  ' * indent
        line = f'{pad}[{self.status.upper()}] {self.name}'
        if self.checked:
            line += f' ({self.checked} checked)'
        if self.message:
            line += f': {self.message}'
        lines = [line]
        for key, value in self.witnesses.items():
            lines.append(f'{pad}    {key} = {value}')
        for child in self.children:
            lines.append(child.to_text(indent + 1))
        return '\n'.join(lines)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f'LawReport({self.name!r}, {self.status!r})'
