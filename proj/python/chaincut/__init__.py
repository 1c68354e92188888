"""Service-chain placement by round min-cuts."""

import json

from . import _chaincut

InputError = _chaincut.InputError


def _load(doc):
    return json.loads(doc)


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def solve(network, request, algorithm="greedy", alpha=0):
    return _load(_chaincut.solve(_dump(network), _dump(request), algorithm, alpha))


def certify(network, request, placement, seed=1):
    return _load(_chaincut.certify(_dump(network), _dump(request), _dump(placement), seed))


def max_flow(network, source, sink):
    return _chaincut.max_flow(_dump(network), source, sink)


def example1():
    net, req = _chaincut.example1()
    return _load(net), _load(req)


def example2(n, k):
    net, req = _chaincut.example2(n, k)
    return _load(net), _load(req)


def gen_layered(n, k, p=1.0, u=0.5, seed=1):
    net, req = _chaincut.gen_layered(n, k, p, u, seed)
    return _load(net), _load(req)
