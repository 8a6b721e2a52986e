"""
命令行入口 - dpcolor

标准输出只写一个 JSON 文档，日志与诊断写到标准错误。

退出码:
    0 成功
    1 判定类动词给出否定答案（例如 solve 在坏覆盖上）
    2 用法错误或输入不合法
    3 预算或重试耗尽
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from itertools import islice
from typing import Any, Callable, Dict, List, Optional

from pydantic import BaseModel, ValidationError

from ..core.config import get_config, setup_config
from ..core.errors import BudgetExceededError, DPColorError, RetryExhaustedError
from ..core.output_formatter import OutputFormatter, print_search_stats
from ..cover.cover import Cover, canonical_cover, ensure_valid, make_twister, random_full_cover, relabel
from ..cover.dot_export import cover_to_dot
from ..cover.labeling import detect_canonical, detect_twisted_canonical, tree_labeling
from ..graph.degeneracy import coloring_number
from ..graph.graph import Graph, GraphKind, cartesian_product, standard_graph
from ..product.constructions import construct_deterministic_bad_cover
from ..product.product_cover import ProductCover, restrict_fibers
from ..product.randomized import class_rng, construct_even_cycle_bad_cover, construct_odd_cycle_bad_cover
from ..product.shift_classes import shift_classes_odd, shift_classes_twister
from ..product.thresholds import Parity, class_count, minimum_t, replication_count, volatility_probability
from ..product.upper_bound import upper_bound_coloring
from ..product.volatile import badness_verdict, volatile_census
from ..schemas import (
    BadnessVerdictModel,
    CountResultModel,
    CoverModel,
    DegeneracyModel,
    EnumerationModel,
    ErrorResponse,
    ExhaustiveResultModel,
    GraphModel,
    HColoringModel,
    LabelingWitnessModel,
    ProductCoverModel,
    ProductGraphModel,
    SearchStatsModel,
    ShiftClassPartitionModel,
    SolveResultModel,
    SuccessResponse,
    VerificationReportModel,
    VerificationSummaryModel,
    VolatileCensusModel,
)
from ..solver.exhaustive import chi_dp_exhaustive, pdp_exhaustive
from ..solver.search import SearchStats, count_colorings, enumerate_colorings, find_coloring
from .verification import claim_ids, verify_all


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


@dataclass
class CommandResult:
    """动词的结果；raw_text 非空时 -o 写入原始文本而不是 JSON"""
    document: Any
    exit_code: int = EXIT_OK
    raw_text: Optional[str] = None


# ============================================================================
# 输入
# ============================================================================

def _read_json(path: str) -> Any:
    with open(path, encoding='utf-8') as f:
        return json.load(f)


def load_graph(path: str) -> Graph:
    return GraphModel.model_validate(_read_json(path)).to_domain()


def load_cover(path: str) -> Cover:
    return ensure_valid(CoverModel.model_validate(_read_json(path)).to_domain())


def load_product_cover(path: str) -> ProductCover:
    return ProductCoverModel.model_validate(_read_json(path)).to_domain()


def _stats_line(args, label: str, stats: SearchStats) -> None:
    if args.stats:
        print_search_stats(label, stats.nodes, stats.backtracks, stats.elapsed)


# ============================================================================
# 动词
# ============================================================================

def cmd_graph(args) -> CommandResult:
    return CommandResult(GraphModel.from_domain(standard_graph(args.kind, args.params)))


def cmd_solve(args) -> CommandResult:
    stats = SearchStats()
    coloring = find_coloring(load_cover(args.cover), stats)
    _stats_line(args, "solve", stats)
    code = EXIT_NEGATIVE if coloring is None else EXIT_OK
    return CommandResult(SolveResultModel.from_domain(coloring, stats), code)


def cmd_count(args) -> CommandResult:
    stats = SearchStats()
    count = count_colorings(load_cover(args.cover), stats, use_fast_path=not args.no_fast_path)
    _stats_line(args, "count", stats)
    return CommandResult(CountResultModel(count=count, stats=SearchStatsModel.from_domain(stats)))


def cmd_enumerate(args) -> CommandResult:
    stats = SearchStats()
    colorings = enumerate_colorings(load_cover(args.cover), stats)
    if args.limit is not None:
        colorings = islice(colorings, args.limit)
    listed = list(colorings)
    _stats_line(args, "enumerate", stats)
    return CommandResult(EnumerationModel.from_domain(listed, stats))


def cmd_pdp(args) -> CommandResult:
    result = pdp_exhaustive(load_graph(args.graph), args.fold)
    return CommandResult(ExhaustiveResultModel.from_domain(result))


def cmd_chidp(args) -> CommandResult:
    return CommandResult(ExhaustiveResultModel.from_domain(chi_dp_exhaustive(load_graph(args.graph))))


def cmd_col(args) -> CommandResult:
    return CommandResult(DegeneracyModel.from_domain(coloring_number(load_graph(args.graph))))


def cmd_product(args) -> CommandResult:
    product = cartesian_product(load_graph(args.left), load_graph(args.right))
    return CommandResult(ProductGraphModel.from_domain(product))


def cmd_make_cover(args) -> CommandResult:
    if args.kind == "canonical":
        return CommandResult(CoverModel.from_domain(canonical_cover(load_graph(args.graph), args.fold)))
    if args.kind == "twister":
        return CommandResult(CoverModel.from_domain(make_twister(args.half_length, args.fold)))
    if args.kind == "random":
        seed = get_config().require_seed()
        cover = random_full_cover(load_graph(args.graph), args.fold, class_rng(seed, 0))
        return CommandResult(CoverModel.from_domain(cover))
    cover = load_cover(args.cover)
    witness = tree_labeling(cover, args.mode)
    return CommandResult({
        "witness": LabelingWitnessModel.from_domain(witness).model_dump(mode='json'),
        "cover": CoverModel.from_domain(relabel(cover, witness.relabeling)).model_dump(mode='json'),
    })


def cmd_detect(args) -> CommandResult:
    cover = load_cover(args.cover)
    detector = detect_canonical if args.kind == "canonical" else detect_twisted_canonical
    witness = detector(cover)
    if witness is None:
        return CommandResult({"witness": None}, EXIT_NEGATIVE)
    return CommandResult({"witness": LabelingWitnessModel.from_domain(witness).model_dump(mode='json')})


def cmd_construct(args) -> CommandResult:
    if args.kind == "deterministic":
        minimizing = load_cover(args.minimizing) if args.minimizing else None
        bad = load_cover(args.bad) if args.bad else None
        pc = construct_deterministic_bad_cover(load_graph(args.graph), args.k, args.t, minimizing, bad)
        return CommandResult(ProductCoverModel.from_domain(pc))
    parity = Parity.ODD if args.kind == "odd-cycle" else Parity.EVEN
    seed = get_config().require_seed()
    t = args.t if args.t is not None else minimum_t(parity, args.k, args.m)
    construct = construct_odd_cycle_bad_cover if parity == Parity.ODD else construct_even_cycle_bad_cover
    pc = construct(args.m, args.k, t, seed=seed)
    return CommandResult(ProductCoverModel.from_domain(pc, seed=seed))


def cmd_verdict(args) -> CommandResult:
    pc = load_product_cover(args.product_cover)
    return CommandResult(BadnessVerdictModel.from_domain(badness_verdict(pc)))


def cmd_census(args) -> CommandResult:
    pc = load_product_cover(args.product_cover)
    if args.fibers is not None:
        pc = restrict_fibers(pc, args.fibers)
    return CommandResult(VolatileCensusModel.from_domain(volatile_census(pc)))


def cmd_classes(args) -> CommandResult:
    if args.kind == "odd":
        partition = shift_classes_odd(args.n, args.k)
    else:
        twister = load_cover(args.cover) if args.cover else make_twister(args.half_length, args.fold)
        partition = shift_classes_twister(twister)
    return CommandResult(ShiftClassPartitionModel.from_domain(partition))


def cmd_ck(args) -> CommandResult:
    document: Dict[str, Any] = {
        "parity": args.parity,
        "k": args.k,
        "c_k": replication_count(args.parity, args.k),
        "volatility_probability": str(volatility_probability(args.parity, args.k)),
    }
    if args.m is not None:
        document["m"] = args.m
        document["class_count"] = class_count(args.parity, args.k, args.m)
        document["minimum_t"] = minimum_t(args.parity, args.k, args.m)
    return CommandResult(document)


def cmd_upper_bound(args) -> CommandResult:
    product = cartesian_product(load_graph(args.left), load_graph(args.right))
    coloring = upper_bound_coloring(product, load_cover(args.cover), chi_dp_left=args.chi_dp)
    return CommandResult({"coloring": HColoringModel.from_domain(coloring).model_dump(mode='json')})


def cmd_verify(args) -> CommandResult:
    claim = args.filter or args.claim
    reports = verify_all(claim, slow=args.slow, samples=args.samples)
    summary = VerificationSummaryModel(
        reports=[VerificationReportModel(**r.to_dict()) for r in reports],
        passed=sum(1 for r in reports if r.passed),
        total=len(reports),
    )
    code = EXIT_OK if summary.passed == summary.total else EXIT_NEGATIVE
    return CommandResult(summary, code)


def cmd_export_dot(args) -> CommandResult:
    if args.product_cover:
        pc = load_product_cover(args.product_cover)
        labels = [f"({u},{v})" for u, v in (pc.product.pair(x) for x in pc.cover.base.vertices)]
        dot = cover_to_dot(pc.cover, args.name, labels)
    else:
        dot = cover_to_dot(load_cover(args.cover), args.name)
    return CommandResult({"dot": dot}, raw_text=dot)


# ============================================================================
# 解析器
# ============================================================================

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-o', '--output', help='把结果写入文件而不是标准输出')
    common.add_argument('--budget', type=int, help='穷举覆盖数上限（DPCOLOR_BUDGET）')
    common.add_argument('--verdict-budget', type=int, help='X-着色数上限（DPCOLOR_VERDICT_BUDGET）')
    common.add_argument('--retry-cap', type=int, help='每组重试上限（DPCOLOR_RETRY_CAP）')
    common.add_argument('--seed', type=int, help='随机种子（DPCOLOR_SEED）')
    common.add_argument('--workers', type=int, help='线程池宽度（DPCOLOR_WORKERS）')
    common.add_argument('--no-cross-check', action='store_true', help='随机构造不复核快速判据')
    common.add_argument('--log-level', help='日志级别（DPCOLOR_LOG_LEVEL）')
    common.add_argument('--stats', action='store_true', help='在标准错误打印搜索统计')
    common.add_argument('--quiet', action='store_true', help='关闭标准错误上的诊断输出')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog='dpcolor', description='精确 DP 着色工作台')
    verbs = parser.add_subparsers(dest='verb', required=True)

    def verb(name: str, handler: Callable[[Any], CommandResult], help_text: str) -> argparse.ArgumentParser:
        sub = verbs.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = verb('graph', cmd_graph, '生成标准图')
    sub.add_argument('kind', choices=[k.value for k in GraphKind])
    sub.add_argument('params', type=int, nargs='+')

    sub = verb('solve', cmd_solve, '寻找一个 H-着色')
    sub.add_argument('--cover', required=True)

    sub = verb('count', cmd_count, '精确计数 H-着色')
    sub.add_argument('--cover', required=True)
    sub.add_argument('--no-fast-path', action='store_true', help='圈上也走回溯计数')

    sub = verb('enumerate', cmd_enumerate, '按字典序列出 H-着色')
    sub.add_argument('--cover', required=True)
    sub.add_argument('--limit', type=int)

    sub = verb('pdp', cmd_pdp, 'DP 色函数 P_DP(G, m)')
    sub.add_argument('--graph', required=True)
    sub.add_argument('--fold', '-m', type=int, required=True)

    sub = verb('chidp', cmd_chidp, 'DP 色数 χ_DP(G)')
    sub.add_argument('--graph', required=True)

    sub = verb('col', cmd_col, '着色数与退化序')
    sub.add_argument('--graph', required=True)

    sub = verb('product', cmd_product, '笛卡尔积')
    sub.add_argument('--left', required=True)
    sub.add_argument('--right', required=True)

    sub = verb('make-cover', cmd_make_cover, '生成覆盖')
    sub.add_argument('kind', choices=['canonical', 'twister', 'tree-label', 'random'])
    sub.add_argument('--graph')
    sub.add_argument('--fold', type=int)
    sub.add_argument('--half-length', type=int)
    sub.add_argument('--cover')
    sub.add_argument('--mode', choices=['canonical', 'twisted'], default='canonical')

    sub = verb('detect', cmd_detect, '检测规范 / 扭转规范标号')
    sub.add_argument('kind', choices=['canonical', 'twisted'])
    sub.add_argument('--cover', required=True)

    sub = verb('construct', cmd_construct, '构造 G □ K_{k,t} 的坏覆盖')
    sub.add_argument('kind', choices=['deterministic', 'odd-cycle', 'even-cycle', *CONSTRUCT_ALIASES])
    sub.add_argument('--graph')
    sub.add_argument('-k', type=int, required=True)
    sub.add_argument('-t', type=int)
    sub.add_argument('-m', type=int)
    sub.add_argument('--minimizing', help='H_G 覆盖文件')
    sub.add_argument('--bad', help="H'_G 覆盖文件")

    sub = verb('verdict', cmd_verdict, '判定乘积覆盖是否为坏覆盖')
    sub.add_argument('--product-cover', required=True)

    sub = verb('census', cmd_census, '易损计数')
    sub.add_argument('--product-cover', required=True)
    sub.add_argument('--fibers', type=int, help='只保留前 t\' 个 Y-纤维')

    sub = verb('classes', cmd_classes, '移位类')
    sub.add_argument('kind', choices=['odd', 'twister'])
    sub.add_argument('-n', type=int)
    sub.add_argument('-k', type=int)
    sub.add_argument('--cover')
    sub.add_argument('--half-length', type=int)
    sub.add_argument('--fold', type=int)

    sub = verb('ck', cmd_ck, '复制次数 c_k 与所需纤维数')
    sub.add_argument('--parity', choices=[p.value for p in Parity], required=True)
    sub.add_argument('-k', type=int, required=True)
    sub.add_argument('-m', type=int)

    sub = verb('upper-bound', cmd_upper_bound, 'G □ H 上 d-重覆盖的构造性着色')
    sub.add_argument('--left', required=True)
    sub.add_argument('--right', required=True)
    sub.add_argument('--cover', required=True)
    sub.add_argument('--chi-dp', type=int, help='已知的 χ_DP(G)')

    sub = verb('verify', cmd_verify, '验证论断')
    sub.add_argument('claim', nargs='?', default='all', help='论断标识或 all: ' + ', '.join(claim_ids()))
    sub.add_argument('--filter')
    sub.add_argument('--slow', action='store_true')
    sub.add_argument('--samples', type=int, help='覆盖抽样协议的样本数')

    sub = verb('export-dot', cmd_export_dot, '导出 Graphviz DOT')
    sub.add_argument('--cover')
    sub.add_argument('--product-cover')
    sub.add_argument('--name', default='cover')

    return parser


# construct 的别名
CONSTRUCT_ALIASES = {
    'thm14': 'deterministic',
    'thm17': 'odd-cycle',
    'thm18': 'even-cycle',
}

_REQUIRED = {
    ('make-cover', 'canonical'): ('graph', 'fold'),
    ('make-cover', 'random'): ('graph', 'fold'),
    ('make-cover', 'twister'): ('half_length', 'fold'),
    ('make-cover', 'tree-label'): ('cover',),
    ('construct', 'deterministic'): ('graph',),
    ('construct', 'odd-cycle'): ('m',),
    ('construct', 'even-cycle'): ('m',),
    ('classes', 'odd'): ('n', 'k'),
}


def _check_required(parser: argparse.ArgumentParser, args) -> None:
    """按子类型检查必填参数；缺失时按 argparse 的方式以退出码 2 结束"""
    if args.verb == 'construct':
        args.kind = CONSTRUCT_ALIASES.get(args.kind, args.kind)
    missing = [
        name for name in _REQUIRED.get((args.verb, getattr(args, 'kind', None)), ())
        if getattr(args, name) is None
    ]
    if args.verb == 'classes' and args.kind == 'twister' and not args.cover and (
            args.half_length is None or args.fold is None):
        missing.append('cover 或 half_length + fold')
    if args.verb == 'export-dot' and not (args.cover or args.product_cover):
        missing.append('cover 或 product_cover')
    if missing:
        parser.error(f"{args.verb} 缺少参数: {', '.join('--' + m.replace('_', '-') for m in missing)}")


# ============================================================================
# 输出与入口
# ============================================================================

def _to_json(document: Any) -> str:
    if isinstance(document, BaseModel):
        document = document.model_dump(mode='json')
    return json.dumps(document, ensure_ascii=False, indent=2)


def _write(result: CommandResult, output: Optional[str]) -> None:
    if output is None:
        print(_to_json(result.document))
        return
    with open(output, 'w', encoding='utf-8') as f:
        f.write(result.raw_text if result.raw_text is not None else _to_json(result.document))
    print(_to_json(SuccessResponse(message="结果已写入文件", data={"output": output})))


def _fail(exc: Exception, code: int, details: Optional[Dict[str, Any]] = None) -> int:
    response = ErrorResponse.from_exception(exc)
    if details is not None:
        response.details = details
    logger.error("%s: %s", response.type, response.error)
    print(_to_json(response))
    return code


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_required(parser, args)
    OutputFormatter.PRINT_ENABLED = not args.quiet

    try:
        config = setup_config(
            budget=args.budget,
            verdict_budget=args.verdict_budget,
            retry_cap=args.retry_cap,
            seed=args.seed,
            workers=args.workers,
            cross_check=False if args.no_cross_check else None,
            log_level=args.log_level.upper() if args.log_level else None,
        )
    except DPColorError as e:
        return _fail(e, EXIT_USAGE)
    logging.basicConfig(stream=sys.stderr, level=config.log_level, format=LOG_FORMAT, force=True)

    try:
        result = args.handler(args)
    except (BudgetExceededError, RetryExhaustedError) as e:
        return _fail(e, EXIT_EXHAUSTED)
    except DPColorError as e:
        return _fail(e, EXIT_USAGE)
    except ValidationError as e:
        return _fail(e, EXIT_USAGE, {'errors': json.loads(e.json())})
    except (json.JSONDecodeError, OSError) as e:
        return _fail(e, EXIT_USAGE)

    _write(result, args.output)
    return result.exit_code


if __name__ == '__main__':
    sys.exit(main())
