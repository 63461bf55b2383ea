"""
Ideal Matching Lab - 主程序入口

正则语言理想上的模式匹配：自动机运算、见证生成与状态复杂度实验
"""
import sys
import click
from pathlib import Path

# 添加项目根目录到 Python 路径
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.utils.config_loader import ConfigLoader
from src.utils.logger import setup_logger
from src.cli.commands import Commands, EXIT_INPUT_ERROR
from src.core.ideals import IdealKind
from src.core.matchers import MatchMode
from src.core.witnesses import WitnessFamily, WitnessRole
from src.formatters.factory import FormatterFactory

KINDS = [k.value for k in IdealKind]
MODES = [m.value for m in MatchMode]
FAMILIES = [f.value for f in WitnessFamily]
ROLES = [r.value for r in WitnessRole]
FORMATS = FormatterFactory.get_supported_formats()

dot_option = click.option('--dot', is_flag=True, help='输出 Graphviz DOT 而不是 DFA 文本格式')


@click.group()
@click.option('--config', '-c', default=None, help='配置文件路径（默认：config.local.yaml 或 config.yaml）')
@click.pass_context
def cli(ctx, config):
    """Ideal Matching Lab - 理想模式匹配与状态复杂度实验"""
    required = config is not None
    if config is None:
        config = 'config.local.yaml' if Path('config.local.yaml').exists() else 'config.yaml'

    try:
        config_obj = ConfigLoader(config, required=required).load()
        setup_logger(
            level=config_obj.logging.level,
            log_file=config_obj.logging.file,
            log_format=config_obj.logging.format
        )
    except Exception as e:
        click.echo(f"❌ 加载配置失败: {e}", err=True)
        sys.exit(EXIT_INPUT_ERROR)

    ctx.ensure_object(dict)
    ctx.obj['commands'] = Commands(config_obj)


@cli.command()
@click.option('--kind', required=True, type=click.Choice(KINDS), help='理想种类')
@click.argument('source', type=click.File('r'))
@dot_option
@click.pass_context
def ideal(ctx, kind, source, dot):
    """
    生成 FILE 的语言的理想（最小 DFA）

    \b
    示例:
    python src/main.py witness --family suffix_general --role pattern -m 4 | python src/main.py ideal --kind left -
    """
    sys.exit(ctx.obj['commands'].ideal_command(kind, source, dot))


@cli.command()
@click.argument('first', type=click.File('r'))
@click.argument('second', type=click.File('r'))
@dot_option
@click.pass_context
def shuffle(ctx, first, second, dot):
    """两个语言的 shuffle"""
    sys.exit(ctx.obj['commands'].shuffle_command(first, second, dot))


@cli.command()
@click.option('--mode', required=True, type=click.Choice(MODES), help='匹配模式')
@click.option('--pattern', type=click.File('r'), default=None, help='模式 DFA 文件')
@click.option('--word', default=None, help='单词模式（字母需在文本字母表内）')
@click.option('--text', required=True, type=click.File('r'), help='文本 DFA 文件')
@click.option('--diagnostics', is_flag=True, help='在 stderr 报告直积可达状态数')
@dot_option
@click.pass_context
def match(ctx, mode, pattern, word, text, diagnostics, dot):
    """
    T 与模式生成的理想之交（最小 DFA）

    \b
    示例:
    python src/main.py match --mode suffix --word bbb --text t.dfa
    """
    sys.exit(ctx.obj['commands'].match_command(mode, text, pattern, word, diagnostics, dot))


@cli.command()
@click.option('--mode', required=True, type=click.Choice(MODES), help='匹配模式')
@click.option('--pattern', type=click.File('r'), default=None, help='模式 DFA 文件')
@click.option('--word', default=None, help='单词模式')
@click.option('--alphabet', default=None, help='配合 --word 使用的字母表（默认取出现过的字符）')
@click.option('-i', '--input', 'text_input', required=True, help='要判定的文本')
@click.pass_context
def classify(ctx, mode, pattern, word, alphabet, text_input):
    """判断文本是否以给定模式包含模式中的单词（真：退出码 0，假：1）"""
    sys.exit(ctx.obj['commands'].classify_command(mode, text_input, pattern, word, alphabet))


@cli.command()
@click.option('--family', required=True, type=click.Choice(FAMILIES), help='见证族')
@click.option('--role', required=True, type=click.Choice(ROLES), help='pattern 或 text')
@click.option('-m', 'm', type=int, default=None, help='模式参数 m')
@click.option('-n', 'n', type=int, default=None, help='文本参数 n')
@dot_option
@click.pass_context
def witness(ctx, family, role, m, n, dot):
    """输出见证 DFA（按构造原样输出，不做最小化）"""
    sys.exit(ctx.obj['commands'].witness_command(family, role, m, n, dot))


@cli.command()
@click.pass_context
def families(ctx):
    """列出全部见证族及其参数下限"""
    sys.exit(ctx.obj['commands'].families_command())


@cli.command()
@click.argument('source', type=click.File('r'))
@dot_option
@click.pass_context
def minimize(ctx, source, dot):
    """最小化（NFA 输入先做子集构造）"""
    sys.exit(ctx.obj['commands'].minimize_command(source, dot))


@cli.command()
@click.argument('first', type=click.File('r'))
@click.argument('second', type=click.File('r'))
@click.pass_context
def equiv(ctx, first, second):
    """语言等价（真：退出码 0，假：1）"""
    sys.exit(ctx.obj['commands'].equiv_command(first, second))


@cli.command()
@click.argument('first', type=click.File('r'))
@click.argument('second', type=click.File('r'))
@click.pass_context
def iso(ctx, first, second):
    """两个最小 DFA 是否同构（真：退出码 0，假：1；非最小输入：2）"""
    sys.exit(ctx.obj['commands'].iso_command(first, second))


@cli.command(name='enumerate')
@click.argument('source', type=click.File('r'))
@click.option('--max-len', type=int, required=True, help='最大单词长度（受配置 enumerate_guard 限制）')
@click.pass_context
def enumerate_words(ctx, source, max_len):
    """列出语言中长度不超过 --max-len 的全部单词"""
    sys.exit(ctx.obj['commands'].enumerate_command(source, max_len))


@cli.command()
@click.argument('word')
@click.option('--alphabet', default=None, help='字母表（默认取单词中出现的字符）')
@click.pass_context
def lemmas(ctx, word, alphabet):
    """打印单词的边界表并检查后缀自动机的转移恒等式"""
    sys.exit(ctx.obj['commands'].lemmas_command(word, alphabet))


@cli.command()
@click.option('--family', required=True, type=click.Choice(FAMILIES + ['all']), help='见证族，all 表示全部')
@click.option('--m-range', default=None, help='m 的闭区间 A..B（默认按族）')
@click.option('--n-range', default=None, help='n 的闭区间 C..D（默认按族）')
@click.option('--format', 'format_type', default=None,
              type=click.Choice(FORMATS, case_sensitive=False),
              help='报告格式（默认：按 --out 扩展名，否则 csv）')
@click.option('-o', '--out', default=None, help='报告输出文件（默认 stdout）')
@click.option('--table', is_flag=True, help='在 stderr 打印表格摘要')
@click.pass_context
def complexity(ctx, family, m_range, n_range, format_type, out, table):
    """
    在 (m, n) 网格上测量状态复杂度并与上界比较

    \b
    示例:
    python src/main.py complexity --family suffix_general --m-range 2..8 --n-range 2..5 --format json
    """
    sys.exit(ctx.obj['commands'].complexity_command(family, m_range, n_range, format_type, out, table))


@cli.command(name='search-alphabet')
@click.option('-m', 'm', type=int, required=True, help='模式状态数（字母表大小为 m-2）')
@click.option('-n', 'n', type=int, required=True, help='文本状态数')
@click.option('--budget', type=int, default=None, help='随机样本数（默认取配置）')
@click.option('--seed', type=int, default=None, help='随机种子（默认取配置）')
@click.option('--exhaustive/--sampled', default=None, help='强制穷举或强制抽样（默认按预算决定）')
@click.option('--format', 'format_type', default=None,
              type=click.Choice(FORMATS, case_sensitive=False), help='报告格式')
@click.option('-o', '--out', default=None, help='报告输出文件（默认 stdout）')
@click.pass_context
def search_alphabet(ctx, m, n, budget, seed, exhaustive, format_type, out):
    """在 m-2 个字母上搜索能否达到子序列匹配的上界"""
    sys.exit(ctx.obj['commands'].search_command(m, n, budget, seed, format_type, out, exhaustive))


if __name__ == '__main__':
    cli()
