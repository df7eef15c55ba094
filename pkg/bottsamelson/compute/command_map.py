import logging
from typing import Any, Callable, Dict, List

from bottsamelson.compute.bstree import build_tree, graded_rank, tree_to_dot
from bottsamelson.compute.defect import (
    bm_character,
    character_conjecture_holds,
    decompose,
    defect_at,
    phi_matrix,
)
from bottsamelson.compute.hecke import kl_element
from bottsamelson.compute.momentgraph import build_interval_graph, build_lower_set_graph, export_graph, gkm_check
from bottsamelson.compute.reachability import census
from bottsamelson.compute.rootsys import affine_simple_system, highest_root, positive_roots
from bottsamelson.compute.weyl import CoxeterContext, sorted_elements
from bottsamelson.exceptions import NonGKMInput, ZeroLabel
from bottsamelson.model.GroupElement import GroupElement, Word
from bottsamelson.model.RunConfig import RunConfig

CommandHandler = Callable[[RunConfig, logging.Logger], Any]


def _context(config: RunConfig, logger: logging.Logger) -> CoxeterContext:
    return CoxeterContext(config.datum(), logger)


def _require_word(config: RunConfig) -> Word:
    if config.word is None:
        raise ValueError(f"Command {config.command} needs --word")
    return config.word


def _require_x(ctx: CoxeterContext, config: RunConfig) -> GroupElement:
    if config.x is None:
        raise ValueError(f"Command {config.command} needs --x")
    return ctx.ev_word(config.x)


def _target(ctx: CoxeterContext, config: RunConfig) -> GroupElement:
    """The element named by --x, else the evaluation of --word."""
    if config.x is not None:
        return ctx.ev_word(config.x)
    return ctx.ev_word(_require_word(config))


def run_roots(config: RunConfig, logger: logging.Logger) -> Dict[str, Any]:
    datum = config.datum()
    return {
        "datum": datum.to_dict(),
        "simple": [r.to_dict() for r in affine_simple_system(datum)],
        "positive": [r.to_dict() for r in positive_roots(datum)],
        "highest": str(highest_root(datum)),
    }


def run_group(config: RunConfig, logger: logging.Logger) -> Dict[str, Any]:
    ctx = _context(config, logger)
    if config.word is None and config.x is None:
        elements = ctx.all_elements()
        top = None
    else:
        w = _target(ctx, config)
        elements = sorted_elements(ctx.bruhat_interval(w))
        top = w.word_str
    return {"top": top, "size": len(elements), "elements": [x.to_dict() for x in elements]}


def run_graph(config: RunConfig, logger: logging.Logger) -> Any:
    ctx = _context(config, logger)
    graph = build_interval_graph(ctx, _target(ctx, config), config.field())
    if config.format == "json":
        return graph.to_dict()
    return export_graph(graph, config.format)


def run_gkm(config: RunConfig, logger: logging.Logger) -> Dict[str, Any]:
    ctx = _context(config, logger)
    field = config.field()
    try:
        graph = build_lower_set_graph(ctx, ctx.subword_closure(_require_word(config)), field)
    except ZeroLabel as e:
        raise NonGKMInput(str(e)) from e
    return dict(gkm_check(graph).to_dict())


def run_tree(config: RunConfig, logger: logging.Logger) -> Any:
    ctx = _context(config, logger)
    tree = build_tree(ctx, _require_word(config), _require_x(ctx, config))
    return tree_to_dot(tree) if config.dot else tree.to_dict()


def run_grk(config: RunConfig, logger: logging.Logger) -> Dict[str, Any]:
    ctx = _context(config, logger)
    x = _require_x(ctx, config)
    word = _require_word(config)
    return {"word": list(word), "x": x.word_str, "grk": graded_rank(ctx, word, x).to_dict()}


def run_phi(config: RunConfig, logger: logging.Logger) -> Dict[str, Any]:
    ctx = _context(config, logger)
    return dict(phi_matrix(ctx, _require_word(config), _require_x(ctx, config), config.field()).to_dict())


def run_defect(config: RunConfig, logger: logging.Logger) -> Dict[str, Any]:
    ctx = _context(config, logger)
    x = _require_x(ctx, config)
    word = _require_word(config)
    return {"word": list(word), "x": x.word_str, "defect": defect_at(ctx, word, x, config.field()).to_dict()}


def run_decompose(config: RunConfig, logger: logging.Logger) -> List[Any]:
    ctx = _context(config, logger)
    decomposition = decompose(
        ctx, _require_word(config), config.field(), allow_nonreduced=config.allow_nonreduced, logger=logger
    )
    return [dict(s) for s in decomposition.to_dict()]


def run_character(config: RunConfig, logger: logging.Logger) -> Dict[str, Any]:
    ctx = _context(config, logger)
    w = _target(ctx, config)
    character = bm_character(ctx, w, config.field(), logger=logger)
    return {
        "w": w.word_str,
        "char": config.characteristic,
        "stalks": [{"x": x.word_str, "grk": character[x].to_dict()} for x in sorted_elements(character)],
    }


def run_conjecture(config: RunConfig, logger: logging.Logger) -> Dict[str, Any]:
    ctx = _context(config, logger)
    return dict(character_conjecture_holds(ctx, _target(ctx, config), config.field(), logger=logger).to_dict())


def run_kl(config: RunConfig, logger: logging.Logger) -> Dict[str, Any]:
    ctx = _context(config, logger)
    w = _target(ctx, config)
    element = kl_element(ctx, w)
    return {
        "w": w.word_str,
        "element": element.to_dict(),
        "polynomials": [{"x": x.word_str, "h": c.to_dict()} for x, c in element.terms],
    }


def run_census(config: RunConfig, logger: logging.Logger) -> Dict[str, Any]:
    if config.affine:
        raise ValueError("Census runs over finite Weyl groups only")
    count = census(config.type_label, config.rank, config.n, threads=config.threads, prune=config.prune, logger=logger)
    return {"type": config.type_label.upper(), "rank": config.rank, "n": config.n, "count": count}


COMMAND_MAP: Dict[str, CommandHandler] = {
    "roots": run_roots,
    "group": run_group,
    "graph": run_graph,
    "gkm": run_gkm,
    "tree": run_tree,
    "grk": run_grk,
    "phi": run_phi,
    "defect": run_defect,
    "decompose": run_decompose,
    "character": run_character,
    "conjecture": run_conjecture,
    "kl": run_kl,
    "census": run_census,
}
