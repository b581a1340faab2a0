"""
Module cli
==========
Command line interface ``reebindex``.

Every subcommand reads JSON input, writes a JSON (or text) report that carries
the schema version and the effective configuration, and exits with

* 0: success, consistent audit;
* 1: usage or input error;
* 2: bounded search exhausted;
* 3: audit verdict 'contradiction';
* 4: audit verdict 'inconclusive', missing local homology;
* 5: precision cap reached.
"""
#===============================================================================
import logging
import sys
from fractions import Fraction
#===============================================================================
import click
import numpy as np
#===============================================================================
from reebindex import __version__, arith, serialize
from reebindex import bott, chomology, cijt, models, sympath
from reebindex.config import Tolerances, RunConfig
from reebindex.exceptions import ReebIndexError, StructuralError
#===============================================================================
reebindex_log = logging.getLogger('reebindex_log')
#===============================================================================
EXIT_OK, EXIT_USAGE, EXIT_SEARCH, EXIT_CONTRADICTION, EXIT_INCONCLUSIVE, EXIT_PRECISION = range(6)
VERDICT_EXIT = {'consistent': EXIT_OK, 'contradiction': EXIT_CONTRADICTION, 'inconclusive': EXIT_INCONCLUSIVE}
#===============================================================================
class ReebIndexGroup(click.Group):
    """
    Group translating exceptions into the exit codes of the package.
    """
    def main(self, args=None, prog_name=None, standalone_mode=True, **extra):
        try:
            rv = super().main(args=args, prog_name=prog_name, standalone_mode=False, **extra)
        except click.ClickException as e:
            e.show()
            rv = EXIT_USAGE
        except click.Abort:
            click.echo("Aborted.", err=True)
            rv = EXIT_USAGE
        except ReebIndexError as e:
            click.echo(f"Error: {type(e).__name__}: {e}", err=True)
            rv = e.exit_code
        rv = rv if isinstance(rv, int) else EXIT_OK
        if standalone_mode:
            sys.exit(rv)
        return rv
#===============================================================================
def _configure_logging(verbose, log_file):
    for h in list(reebindex_log.handlers):
        if getattr(h, '_reebindex_cli', False):
            reebindex_log.removeHandler(h)
            h.close()
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(f"%(levelname)s: %(name)s (reebindex v{__version__}) %(message)s"))
    handler._reebindex_cli = True
    reebindex_log.addHandler(handler)
    if log_file:
        fh = logging.FileHandler(log_file)
        fh.setFormatter(logging.Formatter("%(asctime)s %(levelname)s: %(name)s %(message)s"))
        fh._reebindex_cli = True
        reebindex_log.addHandler(fh)
    reebindex_log.setLevel(logging.DEBUG if verbose else logging.WARNING)
#===============================================================================
def _config(ctx, subcommand, **kwargs):
    obj = ctx.obj
    return RunConfig(subcommand=subcommand, tolerances=obj['tolerances'], format=obj['format'], **kwargs)
#===============================================================================
def _emit(kind, payload, config):
    doc = serialize.report(kind, payload, config)
    text = serialize.dumps(doc) if config.format == 'json' else serialize.to_text(doc) + '\n'
    if config.output_path:
        with open(config.output_path, 'w') as f:
            f.write(text)
    else:
        click.echo(text, nl=False)
#===============================================================================
def _parse_range(text):
    """'a..b' → (a, b)."""
    try:
        lo, hi = (int(x) for x in text.split('..'))
    except ValueError:
        raise click.BadParameter(f"expecting a..b, got '{text}'")
    if lo > hi:
        raise click.BadParameter(f"empty range '{text}'")
    return lo, hi
#===============================================================================
def _read_orbits(path):
    obj = serialize.read_json(path)
    records = obj.get('orbits', obj) if isinstance(obj, dict) else obj
    if not isinstance(records, list):
        raise StructuralError(f"'{path}' holds no list of orbits.")
    return [bott.orbit_from_json(o) for o in records]
#===============================================================================
@click.group(cls=ReebIndexGroup)
@click.version_option(__version__, prog_name='reebindex')
@click.option('--tol-sympl', type=float, default=None, help='Symplecticity tolerance of float matrices.')
@click.option('--tol-rank', type=float, default=None, help='Rank tolerance.')
@click.option('--tol-time', type=float, default=None, help='Time resolution of crossings.')
@click.option('--precision-cap', type=int, default=None, help='Maximal mpmath precision (digits).')
@click.option('--format', 'fmt', type=click.Choice(['json', 'text']), default='json')
@click.option('--log', 'log_file', type=click.Path(dir_okay=False), default=None, help='Also log to FILE.')
@click.option('-v', '--verbose', is_flag=True)
@click.pass_context
def main_group(ctx, tol_sympl, tol_rank, tol_time, precision_cap, fmt, log_file, verbose):
    """
    Conley-Zehnder indices, Bott functions, common index jumps and contact
    homology audits of closed Reeb orbits.
    """
    _configure_logging(verbose, log_file)
    tolerances = Tolerances().updated(tau_sympl=tol_sympl, tau_rank=tol_rank, tau_time=tol_time,
                                      precision_cap_dps=precision_cap)
    arith.set_precision_cap(tolerances.precision_cap_dps)
    ctx.obj = {'tolerances': tolerances, 'format': fmt}
#===============================================================================
@main_group.command()
@click.option('--path', 'path_file', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--mode', type=click.Choice(['auto', 'exact', 'numeric']), default='auto')
@click.option('--attempts', type=int, default=4)
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.pass_context
def index(ctx, path_file, mode, attempts, out):
    """Conley-Zehnder index triple of a path."""
    config = _config(ctx, 'index', input_path=path_file, output_path=out, attempts=attempts)
    path = sympath.path_from_json(serialize.read_json(path_file), config.tolerances)
    triple = sympath.index_triple(path, mode, config.tolerances, attempts)
    _emit('index', {'mu_cz': None if triple.nullity else triple.mu_minus,
                    'mu_minus': triple.mu_minus,
                    'mu_plus': triple.mu_plus,
                    'nullity': triple.nullity,
                    'rs_index': arith.to_str(sympath.rs_index(path, mode, config.tolerances))}, config)
#===============================================================================
@main_group.command('bott')
@click.option('--path', 'path_file', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('-K', 'K', type=int, default=None, help='Number of iterates of the linear system.')
@click.option('--name', default='', help='Orbit name of the record.')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.pass_context
def bott_cmd(ctx, path_file, K, name, out):
    """Infer the Bott function of a path."""
    config = _config(ctx, 'bott', input_path=path_file, output_path=out)
    path = sympath.path_from_json(serialize.read_json(path_file), config.tolerances)
    d = bott.infer_bott(path, K, config.tolerances)
    if name:
        d = bott.BottData(d.dim2n, d.b_at_one, d.jumps, d.jump_at_one, d.elliptic_height, name=name)
    _emit('bott', {'orbit': bott.orbit_to_json(d),
                   'arcs': list(d.arcs),
                   'points': list(d.points),
                   'mean_index': arith.to_str(bott.mean_index(d)),
                   'total_variation': bott.total_variation(d)}, config)
#===============================================================================
@main_group.command()
@click.option('--orbit', 'orbit_file', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('-k', 'ks', type=int, multiple=True, help='Iterate number, may be repeated.')
@click.option('--up-to', type=int, default=None, help='All iterates 1..UP_TO.')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.pass_context
def iterate(ctx, orbit_file, ks, up_to, out):
    """Indices of iterates from Bott data."""
    config = _config(ctx, 'iterate', input_path=orbit_file, output_path=out)
    obj = serialize.read_json(orbit_file)
    d = bott.orbit_from_json(obj.get('orbit', obj))
    ks = sorted(set(ks) | set(range(1, (up_to or 0) + 1)))
    if not ks or ks[0] < 1:
        raise click.UsageError("Give positive iterates with -k or --up-to.")
    rows = []
    for k in ks:
        rows.append({'k': k,
                     'mu_minus': bott.iterated_index(d, k),
                     'mu_plus': bott.iterated_upper(d, k),
                     'nullity': bott.iterated_nullity(d, k),
                     'good': bott.good_iterate(d, k)})
    _emit('iterate', {'orbit': d.name, 'mean_index': arith.to_str(bott.mean_index(d)), 'iterates': rows}, config)
#===============================================================================
@main_group.command('cijt')
@click.option('--orbits', 'orbits_file', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--n0', type=int, required=True)
@click.option('--epsilon', type=str, default=None, help='Rational ε, default 1/(4q𝔮).')
@click.option('--bound', type=int, default=10**6, help='Largest multiplier k of N = k·N0.')
@click.option('--frac-delta', type=str, default=None, help='Closeness of the fractional parts m·θ/π.')
@click.option('--q-multiple', type=int, default=None, help='𝔮 is made a multiple of this.')
@click.option('--mirrored', is_flag=True, help='Negative mean indices.')
@click.option('--n-jobs', type=int, default=1)
@click.option('--verify', 'cert_file', type=click.Path(exists=True, dir_okay=False), default=None,
              help='Verify this certificate instead of searching.')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.pass_context
def cijt_cmd(ctx, orbits_file, n0, epsilon, bound, frac_delta, q_multiple, mirrored, n_jobs, cert_file, out):
    """Common index jump search or certificate verification."""
    config = _config(ctx, 'cijt', input_path=orbits_file, output_path=out, search_bound=bound, n_jobs=n_jobs)
    orbits = _read_orbits(orbits_file)
    if cert_file:
        cert = cijt.certificate_from_json(serialize.read_json(cert_file))
        checks = cijt.verify_certificate(orbits, cert)
        cert = cijt.CijtCertificate(cert.N, cert.k_factor, cert.n0, cert.m, cert.delta, cert.q_param,
                                    cert.epsilon, cert.frac_delta, cert.mirrored, checks)
    else:
        cert = cijt.find_jump(orbits, n0,
                              None if epsilon is None else arith.to_fraction(epsilon),
                              bound, q_multiple,
                              None if frac_delta is None else arith.to_fraction(frac_delta),
                              mirrored, n_jobs)
    _emit('cijt', {'certificate': cijt.certificate_to_json(cert)}, config)
    if not cert.passed:
        ctx.exit(EXIT_CONTRADICTION)
#===============================================================================
def _profile(obj):
    if 'betti' in obj:
        return chomology.profile_from_json(obj)
    return models.catalog_profile(obj.get('name', ''), obj.get('n'), I=obj.get('I'))
#===============================================================================
@main_group.command()
@click.option('--profile', 'profile_file', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--degrees', required=True, help='Degree range a..b.')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.pass_context
def homology(ctx, profile_file, degrees, out):
    """Ranks of the contact homology of a prequantization."""
    config = _config(ctx, 'homology', input_path=profile_file, output_path=out)
    lo, hi = _parse_range(degrees)
    p = _profile(serialize.read_json(profile_file))
    _emit('homology', {'profile': chomology.profile_to_json(p),
                       'k_minus': p.k_minus,
                       'chi0': chomology.chi0(p),
                       'ranks': {str(deg): chomology.prequant_rank(p, deg) for deg in range(lo, hi + 1)}}, config)
#===============================================================================
@main_group.command()
@click.option('--catalog', 'catalog_file', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--mode', type=click.Choice(['positive', 'negative']), default='positive')
@click.option('--relaxed-threshold', type=int, default=None, help='Convexity threshold replacing I - n.')
@click.option('--bound', type=int, default=10**6, help='Search bound of the common index jump.')
@click.option('--n0', type=int, default=None, help='N0 of the jump search, default I.')
@click.option('--n-jobs', type=int, default=1)
@click.option('--report', 'report_file', type=click.Path(dir_okay=False), default=None)
@click.pass_context
def audit(ctx, catalog_file, mode, relaxed_threshold, bound, n0, n_jobs, report_file):
    """Audit a catalog of orbits claimed complete."""
    config = _config(ctx, 'audit', input_path=catalog_file, output_path=report_file, search_bound=bound,
                     n_jobs=n_jobs)
    obj = serialize.read_json(catalog_file)
    if 'betti' not in obj.get('profile', {}):
        obj = dict(obj, profile=chomology.profile_to_json(_profile(obj.get('profile', {}))))
    c = chomology.catalog_from_json(obj, config.tolerances)
    options = chomology.AuditOptions(mode=mode, relaxed_threshold=relaxed_threshold, search_bound=bound,
                                     n0=n0, n_jobs=n_jobs)
    r = chomology.audit(c, options)
    _emit('audit', chomology.report_to_json(r), config)
    if r.verdict != 'consistent':
        click.echo(f"Verdict {r.verdict}: {r.reason}", err=True)
    ctx.exit(VERDICT_EXIT[r.verdict])
#===============================================================================
@main_group.group('models')
def models_group():
    """Exact fixtures."""
#===============================================================================
@models_group.command('ellipsoid')
@click.option('--aspects', required=True, help='Comma separated rationals, e.g. 1,2 or 1,3/2,5/2.')
@click.option('--no-resolve', is_flag=True, help='Omit the iterate homology of degenerate iterates.')
@click.option('--verify-up-to', type=int, default=12)
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.pass_context
def ellipsoid_cmd(ctx, aspects, no_resolve, verify_up_to, out):
    """Orbit catalog of an ellipsoid."""
    config = _config(ctx, 'models ellipsoid', output_path=out)
    spec = models.EllipsoidSpec(tuple(a.strip() for a in aspects.split(',')))
    c = models.ellipsoid_catalog(spec, not no_resolve, verify_up_to, config.tolerances)
    _emit('catalog', chomology.catalog_to_json(c), config)
#===============================================================================
@models_group.command('profile')
@click.option('--name', required=True, type=click.Choice(models.PROFILES))
@click.option('--n', type=int, required=True)
@click.option('--I', 'I', type=int, default=None)
@click.option('--c-B', 'c_B', type=int, default=None)
@click.option('--betti', default=None, help='Comma separated Betti numbers (custom profiles).')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.pass_context
def profile_cmd(ctx, name, n, I, c_B, betti, out):
    """Profile of a prequantization."""
    config = _config(ctx, 'models profile', output_path=out)
    betti = None if betti is None else [int(b) for b in betti.split(',')]
    p = models.catalog_profile(name, n, betti, I, c_B)
    _emit('profile', dict(chomology.profile_to_json(p), r_B=p.r_B, euler=p.euler, k_minus=p.k_minus), config)
#===============================================================================
@main_group.command()
@click.option('--seed', type=int, default=0)
@click.option('--count', type=int, default=20, help='Number of random paths.')
@click.option('--up-to', type=int, default=8, help='Iterates compared per path.')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@click.pass_context
def check(ctx, seed, count, up_to, out):
    """Randomized self-check of the Bott iteration formula."""
    config = _config(ctx, 'check', output_path=out, seed=seed)
    rng = np.random.default_rng(seed)
    failures = []
    for i in range(count):
        blocks = []
        for _ in range(int(rng.integers(1, 4))):
            if rng.random() < 0.7:
                blocks.append(sympath.RotationBlock(Fraction(int(rng.integers(-12, 13)),
                                                                   int(rng.integers(1, 7)))))
            else:
                blocks.append(sympath.HyperbolicBlock(int(rng.integers(2, 5)), int(rng.integers(-2, 3))))
        path = sympath.SymplecticPath(generator=sympath.DirectSum(tuple(blocks)), tolerances=config.tolerances)
        d = bott.BottData.from_generator(path.generator)
        for k in range(1, up_to + 1):
            expected = sympath.cz_lower(sympath.iterate_path(path, k), tolerances=config.tolerances)
            got = bott.iterated_index(d, k)
            if got != expected or got != bott.iterated_index_sum(d, k):
                failures.append({'case': i, 'generator': path.generator.to_json(), 'k': k,
                                 'bott': got, 'cz_lower': expected})
    _emit('check', {'seed': seed, 'count': count, 'up_to': up_to, 'failures': failures}, config)
    if failures:
        ctx.exit(EXIT_USAGE)
#===============================================================================
def main(argv=None):
    """Console script entry point."""
    return main_group.main(args=argv, prog_name='reebindex')
#===============================================================================
