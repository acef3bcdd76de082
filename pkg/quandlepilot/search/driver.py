"""The search for non-affine latin quandles of order 2^k

A non-affine latin quandle Q of order 2^k would be a central extension
F x_{1-psi,psi,theta} A with F a latin quandle of order 2^(k-l) and A of
order 2^l. The driver loops over

1. the groups A of order 2^l, 2 <= l <= k-2, that admit psi,
2. psi up to conjugacy in Aut(A),
3. the library of latin quandles F of order 2^(k-l),

solves for generators of Z_LD(F, A, psi), and looks for a generator that
fails (M). Each (A, psi, F) is an independent work unit; units run in a
fixed order and their records are merged in that order.
"""

import time
import datetime
import concurrent.futures

import numpy as np
import pandas

from ..algebra.groups import AbelianGroup2, EndoMatrix, admissible_class_reps
from ..algebra.modlinalg import span_size
from ..algebra.quandles import (MagmaTable, fingerprint, is_latin, is_medial,
    is_quandle)
from ..algebra.extensions import ExtensionSpec, build_extension
from ..shared import load_params, logtools
from ..shared.misc import RepeatedTimer
from . import cocycles
from . import library

# Column order of the report
RECORD_FIELDS = [
    'fiber', 'psi_class', 'psi', 'base', 'base_provenance', 'base_fingerprint',
    'unknowns', 'rows', 'generators', 'log2_zld', 'nonmedial',
    'witness_generator', 'witness', 'seconds',
]


class SearchReport(object):
    """Records of one search and the verdict drawn from them

    Attributes
    ---
    * k : the target order is 2^k
    * records : list of dict, keys RECORD_FIELDS
    * library_sizes : dict, order -> number of library members used
    * verdict : 'YES' iff some record carries a non-medial generator
    * elapsed : wall-clock seconds of the whole run, or None
    """
    def __init__(self, k, records, library_sizes, elapsed=None):
        self.k = k
        self.records = list(records)
        self.library_sizes = dict(library_sizes)
        self.elapsed = elapsed

    @property
    def records_with_witness(self):
        return [r for r in self.records if r['nonmedial'] == 'yes']

    @property
    def verdict(self):
        return 'YES' if self.records_with_witness else 'NO'

    def to_dataframe(self):
        return pandas.DataFrame(self.records, columns=RECORD_FIELDS)

    def format(self):
        sizes = ','.join(f'{order}:{n}' for order, n in sorted(self.library_sizes.items()))
        elapsed = '' if self.elapsed is None else f'{self.elapsed:.1f}'
        header = [
            f'# k\t{self.k}',
            f'# order\t{2 ** self.k}',
            f'# verdict\t{self.verdict}',
            f'# records\t{len(self.records)}',
            f'# records_with_witness\t{len(self.records_with_witness)}',
            f'# library_sizes\t{sizes}',
            f'# elapsed_seconds\t{elapsed}',
            f'# completeness\t{library.COMPLETENESS_NOTE}',
        ]
        body = self.to_dataframe().to_csv(sep='\t', index=False, lineterminator='\n')
        return '\n'.join(header) + '\n' + body

    def write(self, path):
        with open(path, 'w') as fi:
            fi.write(self.format())

    def __repr__(self):
        return (f'SearchReport(k={self.k}, verdict={self.verdict}, '
            f'{len(self.records)} records)')


## Work units
def _psi_text(psi):
    return ';'.join(','.join(str(int(x)) for x in row) for row in psi.entries)

def _solve_unit(unit):
    """Solve one (A, psi, F) unit and return its record

    Module level so worker processes can unpickle it. The unit holds only
    plain values: (signature, class index, psi entries, base name,
    provenance, base table, cross_check, verify).
    """
    (signature, psi_class, psi_entries, base_name, provenance, table,
        cross_check, verify) = unit
    start = time.perf_counter()
    A = AbelianGroup2(signature)
    psi = EndoMatrix(A, psi_entries)
    F = MagmaTable(table)

    # "every generator satisfies (M), hence all extensions are affine"
    # needs F medial
    if is_medial(F) is not True:
        raise RuntimeError(f'base {base_name} is not medial; no conclusion is possible')

    system = cocycles.assemble(F, A, psi)
    thetas = cocycles.solve_ZLD(system, cross_check=cross_check)
    if system.matrix.modulus == 2:
        zld = 2 ** len(thetas)
    else:
        zld = span_size([th.to_vector() for th in thetas], system.matrix.modulus)

    record = {
        'fiber': str(A),
        'psi_class': psi_class,
        'psi': _psi_text(psi),
        'base': base_name,
        'base_provenance': provenance,
        'base_fingerprint': fingerprint(F),
        'unknowns': system.n_unknowns,
        'rows': system.matrix.rows,
        'generators': len(thetas),
        'log2_zld': int(zld).bit_length() - 1,
        'nonmedial': 'no',
        'witness_generator': '',
        'witness': '',
        'seconds': 0.0,
    }

    for k, theta in enumerate(thetas):
        found = cocycles.nonmedial_generator([theta], psi, with_violation=True)
        if found is None:
            continue
        _, violation = found
        if verify:
            q = build_extension(ExtensionSpec(F, A, psi, theta))
            if not (is_quandle(q) and is_latin(q)) or is_medial(q) is True:
                raise RuntimeError(
                    f'witness generator {k} over {base_name}, {A} does not give '
                    'a non-medial latin quandle')
        record['nonmedial'] = 'yes'
        record['witness_generator'] = k
        record['witness'] = ','.join(str(x) for x in violation.witness)
        break
    record['seconds'] = round(time.perf_counter() - start, 3)
    return record


class SearchDriver(object):
    def __init__(self, k, jobs=1, long_run=False, cross_check_lifting=False,
        verify_witnesses=True, params=None):
        """Runs the search for order 2^k

        Arguments
        ---------
        k : int, 4 <= k <= max_search_k
        jobs : int, worker processes (1 runs in this process)
        long_run : bool, must be True for k >= long_run_k
        cross_check_lifting : bool, compare each Howell kernel mod 4 or
            more against the integer-lifting kernel
        verify_witnesses : bool, rebuild every witness extension and check it
        params : dict from load_params.load_defaults(), or None to load it
        """
        if params is None:
            params = load_params.load_defaults()
        self.params = params
        self.logger = logtools.get_logger('search', params['log_level'])

        if k < 4 or k > params['max_search_k']:
            raise ValueError(f'search supports 4 <= k <= {params["max_search_k"]}, got {k}')
        if k >= params['long_run_k'] and not long_run:
            raise ValueError(
                f'k = {k} takes days; pass long_run=True (--long-run) to run it')

        self.k = k
        self.jobs = max(1, int(jobs))
        self.cross_check_lifting = cross_check_lifting
        self.verify_witnesses = verify_witnesses

        self.n_done = 0
        self.n_units = 0
        self.start_time = None

    def libraries(self):
        """order -> QuandleLibrary, for every base order the search needs"""
        return {
            2 ** (self.k - l): library.build_library(2 ** (self.k - l), self.params)
            for l in range(2, self.k - 1)}

    def work_units(self):
        """Every (A, psi class, F), in search order"""
        libs = self.libraries()
        units = []
        for l in range(2, self.k - 1):
            lib = libs[2 ** (self.k - l)]
            for A in library.groups_of_order(2 ** l):
                # k1 > k2 leaves no admissible psi
                if not A.is_homocyclic:
                    continue
                reps = admissible_class_reps(A,
                    max_order=self.params['max_enumeration_order'],
                    max_aut_order=self.params['max_automorphism_group_order'])
                for psi_class, psi in enumerate(reps):
                    for name, F, provenance in lib:
                        units.append((A.signature, psi_class, psi.entries.tolist(),
                            name, provenance, np.asarray(F.table),
                            self.cross_check_lifting, self.verify_witnesses))
        return units

    def _heartbeat(self):
        elapsed = datetime.timedelta(seconds=int(time.time() - self.start_time))
        self.logger.info(
            f'k={self.k}: {self.n_done}/{self.n_units} units done after {elapsed}')

    def run(self):
        """Run every unit and return the SearchReport"""
        self.start_time = time.time()
        units = self.work_units()
        self.n_units = len(units)
        self.n_done = 0
        self.logger.info(f'k={self.k}: {self.n_units} units, {self.jobs} job(s)')

        timer = RepeatedTimer(self.params['progress_interval'], self._heartbeat)
        records = []
        try:
            if self.jobs == 1:
                results = map(_solve_unit, units)
                for record in results:
                    records.append(self._collect(record))
            else:
                with concurrent.futures.ProcessPoolExecutor(max_workers=self.jobs) as ex:
                    for record in ex.map(_solve_unit, units):
                        records.append(self._collect(record))
        finally:
            timer.stop()

        sizes = {order: len(lib) for order, lib in self.libraries().items()}
        report = SearchReport(self.k, records, sizes,
            elapsed=time.time() - self.start_time)
        self._heartbeat()
        self.logger.info(f'k={self.k}: verdict {report.verdict}')
        return report

    def _collect(self, record):
        self.n_done += 1
        if record['nonmedial'] == 'yes':
            self.logger.info(
                f'non-medial generator over {record["base"]} with A={record["fiber"]}, '
                f'psi class {record["psi_class"]}')
        else:
            self.logger.debug(
                f'{record["base"]}, A={record["fiber"]}, psi class '
                f'{record["psi_class"]}: all {record["generators"]} generators satisfy (M)')
        return record


def search(k, jobs=1, long_run=False, cross_check_lifting=False,
    verify_witnesses=True, params=None):
    """Run the search for order 2^k and return its SearchReport"""
    return SearchDriver(k, jobs=jobs, long_run=long_run,
        cross_check_lifting=cross_check_lifting,
        verify_witnesses=verify_witnesses, params=params).run()
