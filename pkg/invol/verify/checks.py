'''One function per verified statement.

Each check takes the Population and returns a CheckResult. A case is
recorded for every group (or subgroup, pair, map) the statement says
something about; hypothesisCount counts the cases where its hypothesis
actually holds, so a check with hypothesisCount 0 verified nothing.
'''
from ..catalog import CHARACTERIZATION_FIXTURES, brute_force_enumerate, catalog_by_order, find_isomorphic
from ..group.automorphisms import automorphism_group, inverted_element_count
from ..group.constructors import abelian_groups, dihedral, direct_product, elementary_abelian, \
    generalized_dihedral
from ..group.homomorphisms import is_isomorphic, surjections
from ..group.recognition import is_elementary_abelian_2, recognize_d8_ea
from ..group.structure import center, central_subgroups, generated_subgroup, is_subgroup, normal_subgroups, \
    normalizer, subgroup_as_group
from ..group.sylow import sylow2
from ..involutions import check_central_bound, check_edmonds_bound, check_edmonds_proportion_bound, \
    check_normal_bound, check_semidirect_characterization, check_sylow_bound, check_two_thirds_bound, \
    coset_involution_counts, dihedral_alpha_closed_form, dihedral_j_closed_form, involution_set, stats
from .anchors import ANCHORS
from .population import PRODUCT_PAIR_MAX_ORDER
from .report import Tally
from fractions import Fraction

HALF = Fraction(1, 2)
TWO_THIRDS = Fraction(2, 3)
THREE_QUARTERS = Fraction(3, 4)
# alpha = 3/4 groups up to this order are searched for surjections onto D8
SURJECTION_MAX_ORDER = 32

def _tally(check_id, population):
    return Tally(check_id, ANCHORS[check_id], population)

def _is_power_of_two(n):
    return n & (n - 1) == 0

def _distinct(members):
    '''Drop members whose table repeats an earlier one.'''
    seen = set()
    kept = []
    for member in members:
        if member.group not in seen:
            seen.add(member.group)
            kept.append(member)
    return kept

def _alpha_three_quarter_two_groups(population):
    candidates = population.catalog_members + population.families.get('d8-by-ea', [])
    return [
        member for member in _distinct(candidates)
        if member.group.order <= SURJECTION_MAX_ORDER and _is_power_of_two(member.group.order)
        and stats(member.group).alpha == THREE_QUARTERS]

def abelian_involution_subgroup(population):
    tally = _tally('abelian-involution-subgroup', f'abelian groups in {population.describe_everything()}')
    for member in population.everything:
        g = member.group
        if not g.is_abelian:
            continue
        tally.hypothesis()
        j = involution_set(g)
        ok = is_subgroup(g, j) and _is_power_of_two(len(j)) and g.order % len(j) == 0
        tally.record(ok, member.label, f'j = {len(j)}')
    return tally.result

def abelian_half_corollary(population):
    tally = _tally('abelian-half-corollary', f'abelian groups in {population.describe_everything()}')
    for member in population.everything:
        g = member.group
        if g.is_abelian and stats(g).alpha > HALF:
            tally.hypothesis()
            tally.record(is_elementary_abelian_2(g), member.label, f'alpha = {stats(g).alpha}')
    return tally.result

def dihedral_closed_form(population):
    tally = _tally('dihedral-closed-form', f'D_2n for 1 <= n <= {population.dihedral_max_n}')
    for n, member in enumerate(population.families['dihedral'], 1):
        tally.hypothesis()
        s = stats(member.group)
        ok = s.j_count == dihedral_j_closed_form(n) and s.alpha == dihedral_alpha_closed_form(n)
        tally.record(ok, member.label, f'j = {s.j_count}, expected {dihedral_j_closed_form(n)}')
    return tally.result

def dihedral_three_quarters(population):
    tally = _tally('dihedral-three-quarters', f'D_2n for 1 <= n <= {population.dihedral_max_n}')
    for n, member in enumerate(population.families['dihedral'], 1):
        g = member.group
        alpha = stats(g).alpha
        # D2 = C2 and D4 = C2^2 are the elementary abelian members
        if n <= 2:
            tally.record(alpha == 1 and is_elementary_abelian_2(g), member.label, f'alpha = {alpha}')
            continue
        tally.hypothesis()
        tally.record(alpha <= THREE_QUARTERS, member.label, f'alpha = {alpha}')
        if alpha == THREE_QUARTERS:
            tally.tight(member.label)
    return tally.result

def direct_product_lemma(population):
    tally = _tally(
        'direct-product-lemma',
        f'ordered pairs from {population.describe_catalog()} with |H||K| <= {PRODUCT_PAIR_MAX_ORDER}')
    entries = population.catalog
    for h in entries:
        for k in entries:
            if h.order * k.order > PRODUCT_PAIR_MAX_ORDER:
                continue
            tally.hypothesis()
            g = direct_product(h.group, k.group)
            expected = {a * k.order + b for a in involution_set(h.group) for b in involution_set(k.group)}
            sh, sk, sg = stats(h.group), stats(k.group), stats(g)
            ok = (set(involution_set(g)) == expected and sg.j_count == sh.j_count * sk.j_count
                  and sg.alpha == sh.alpha * sk.alpha)
            tally.record(ok, g.name, f'j = {sg.j_count}, j(H) j(K) = {sh.j_count * sk.j_count}')
    return tally.result

def normal_subgroup_bound(population):
    tally = _tally('normal-subgroup-bound', f'normal subgroups of {population.describe_catalog()}')
    for entry in population.catalog:
        for h in normal_subgroups(entry.group):
            tally.hypothesis()
            subject = f'{entry.name} over a normal subgroup of order {len(h)}'
            count, proportion = check_normal_bound(entry.group, h)
            tally.record(count.holds and proportion.holds, subject, f'{count}; {proportion}')
            if count.equality:
                tally.tight(subject)
    return tally.result

def central_subgroup_bound(population):
    tally = _tally('central-subgroup-bound', f'central subgroups of {population.describe_catalog()}')
    for entry in population.catalog:
        for h in central_subgroups(entry.group):
            tally.hypothesis()
            subject = f'{entry.name} over a central subgroup of order {len(h)}'
            count, proportion = check_central_bound(entry.group, h)
            tally.record(count.holds and proportion.holds, subject, f'{count}; {proportion}')
            if count.equality and len(h) > 1:
                tally.tight(subject)
    return tally.result

def semidirect_characterization(population):
    tally = _tally('semidirect-characterization', f'{len(CHARACTERIZATION_FIXTURES)} committed action fixtures')
    for fixture in CHARACTERIZATION_FIXTURES:
        tally.hypothesis()
        tally.record(check_semidirect_characterization(*fixture.parts()), fixture.name, 'involution sets differ')
    return tally.result

def semidirect_coset_count(population):
    tally = _tally('semidirect-coset-count', f'cosets of N in {len(CHARACTERIZATION_FIXTURES)} action fixtures')
    for fixture in CHARACTERIZATION_FIXTURES:
        n, q, action = fixture.parts()
        for qi, in_coset, inverted in coset_involution_counts(n, q, action):
            if q.multiply(qi, qi) == 0:
                tally.hypothesis()
            tally.record(in_coset == inverted, f'{fixture.name} coset of q = {qi}',
                         f'{in_coset} involutions, {inverted} inverted elements')
    return tally.result

def sylow_bound(population):
    tally = _tally('sylow-bound', population.describe_everything())
    for member in population.everything:
        tally.hypothesis()
        check = check_sylow_bound(member.group)
        tally.record(check.holds, member.label, str(check))
        if check.equality and member.group.factorize_order().odd_part > 1:
            tally.tight(member.label)
    return tally.result

def sylow_self_normalizing(population):
    tally = _tally('sylow-self-normalizing', f'alpha > 1/2 in {population.describe_everything()}')
    for member in population.everything:
        g = member.group
        if stats(g).alpha <= HALF:
            continue
        tally.hypothesis()
        s = sylow2(g)
        n = normalizer(g, s)
        tally.record(n == s, member.label, f'|S| = {len(s)}, |N(S)| = {len(n)}')
    return tally.result

def center_elementary_abelian(population):
    tally = _tally('center-elementary-abelian', f'j > |G|/2 in {population.describe_everything()}')
    for member in population.everything:
        g = member.group
        if 2 * stats(g).j_count <= g.order:
            continue
        tally.hypothesis()
        z = center(g)
        rows = g.rows
        tally.record(all(rows[x][x] == 0 for x in z), member.label, f'|Z| = {len(z)}')
    return tally.result

def center_strictness(population):
    members = [m for m in population.families['c4-by-ea'] if m.group.order <= 32]
    tally = _tally('center-strictness', 'C4 x C2^(n-2) for n = 2..5')
    for member in members:
        g = member.group
        tally.hypothesis()
        j = stats(g).j_count
        ok = 2 * j == g.order and center(g).is_full and not is_elementary_abelian_2(g)
        tally.record(ok, member.label, f'j = {j}, |Z| = {len(center(g))}')
    return tally.result

def center_trivial_witness(population):
    tally = _tally('center-trivial-witness', f'D_2n for odd 3 <= n <= {population.dihedral_max_n}')
    for n, member in enumerate(population.families['dihedral'], 1):
        if n < 3 or n % 2 == 0:
            continue
        g = member.group
        tally.hypothesis()
        ok = 2 * stats(g).j_count > g.order and len(center(g)) == 1
        tally.record(ok, member.label, f'|Z| = {len(center(g))}')
    return tally.result

def edmonds_bound(population):
    tally = _tally('edmonds-bound', f'even order groups in {population.describe_everything()}')
    for member in population.everything:
        if member.group.order % 2:
            continue
        tally.hypothesis()
        check = check_edmonds_bound(member.group)
        tally.record(check.holds, member.label, str(check))
        if check.equality:
            tally.tight(member.label)
    return tally.result

def edmonds_proportion(population):
    tally = _tally('edmonds-proportion', f'even order groups in {population.describe_everything()}')
    for member in population.everything:
        if member.group.order % 2:
            continue
        tally.hypothesis()
        check = check_edmonds_proportion_bound(member.group)
        tally.record(check.holds, member.label, str(check))
    return tally.result

def _dihedral_type_match(group):
    '''Abelian A of odd order m with G isomorphic to C2^(n-1) x Dih(A), or None.'''
    n, m = group.factorize_order()
    for a in abelian_groups(m):
        candidate = direct_product(elementary_abelian(n - 1), generalized_dihedral(a))
        if is_isomorphic(group, candidate) is not None:
            return a
    return None

def edmonds_equality_case(population):
    families = population.families['dihedral-type']
    tally = _tally(
        'edmonds-equality-case',
        f'equality cases with m > 1 in {population.describe_catalog()} + {len(families)} C2^(n-1) x Dih(A)')
    for entry in population.catalog:
        g = entry.group
        n, m = g.factorize_order()
        if n < 1 or m == 1 or not check_edmonds_bound(g).equality:
            continue
        tally.hypothesis()
        a = _dihedral_type_match(g)
        if tally.record(a is not None, entry.name, 'attains equality but is not of dihedral type'):
            tally.tight(f'{entry.name} = C2^{n - 1} x Dih({a.name})')
    for member in families:
        tally.hypothesis()
        check = check_edmonds_bound(member.group)
        tally.record(check.equality, member.label, str(check))
    return tally.result

def two_thirds_corollary(population):
    tally = _tally('two-thirds-corollary', f'odd part m > 1 in {population.describe_everything()}')
    for member in population.everything:
        g = member.group
        if g.factorize_order().odd_part == 1:
            continue
        tally.hypothesis()
        if g.order % 2:
            alpha = stats(g).alpha
            tally.record(alpha <= TWO_THIRDS, member.label, f'alpha = {alpha}')
            continue
        check = check_two_thirds_bound(g)
        tally.record(check.holds, member.label, str(check))
        if check.equality:
            tally.tight(member.label)
    return tally.result

def involutions_generate(population):
    tally = _tally('involutions-generate', f'alpha > 1/2 in {population.describe_everything()}')
    for member in population.everything:
        g = member.group
        if stats(g).alpha <= HALF:
            continue
        tally.hypothesis()
        generated = generated_subgroup(g, involution_set(g).indices)
        tally.record(generated.is_full, member.label, f'<J(G)> has order {len(generated)}')
    return tally.result

def main_theorem(population):
    tally = _tally('main-theorem', population.describe_everything())
    for member in population.everything:
        g = member.group
        alpha = stats(g).alpha
        if alpha <= THREE_QUARTERS:
            continue
        tally.hypothesis()
        tally.record(alpha == 1 and is_elementary_abelian_2(g), member.label, f'alpha = {alpha}')
    return tally.result

def three_quarters_classification(population):
    tally = _tally('three-quarters-classification', population.describe_everything())
    for member in population.everything:
        g = member.group
        alpha = stats(g).alpha
        k = recognize_d8_ea(g)
        if alpha == THREE_QUARTERS:
            tally.hypothesis()
        ok = (alpha == THREE_QUARTERS) == (k is not None)
        if k is not None:
            ok = ok and g.factorize_order().two_exponent == k + 3
        tally.record(ok, member.label, f'alpha = {alpha}, recognised k = {k}')
        if k is not None and member.source == 'catalog':
            tally.tight(member.label)
    return tally.result

def _central_complement(group, kernel):
    '''A subgroup of order 8 generated by two involutions, meeting kernel trivially and centralising it.'''
    involutions = [x for x in involution_set(group) if x != 0]
    for i, x in enumerate(involutions):
        for y in involutions[i + 1:]:
            if group.commute(x, y):
                continue
            d = generated_subgroup(group, [x, y])
            if len(d) == 8 and len(d & kernel) == 1 and all(group.commute(a, b) for a in d for b in kernel):
                return d
    return None

def surjection_lemma(population):
    members = _alpha_three_quarter_two_groups(population)
    tally = _tally('surjection-lemma', f'surjections onto D8 from {len(members)} groups with alpha = 3/4')
    d8 = dihedral(8)
    for member in members:
        g = member.group
        tally.hypothesis()
        k = recognize_d8_ea(g)
        complements = {}
        for number, phi in enumerate(surjections(g, d8)):
            kernel = phi.kernel()
            if kernel not in complements:
                complements[kernel] = _central_complement(g, kernel)
            ok = (is_elementary_abelian_2(subgroup_as_group(g, kernel))
                  and complements[kernel] is not None
                  and k is not None and 1 << k == len(kernel))
            tally.record(ok, f'{member.label} surjection {number}', f'kernel of order {len(kernel)}')
    return tally.result

def dihedral_meets_center(population):
    members = _alpha_three_quarter_two_groups(population)
    tally = _tally('dihedral-meets-center', f'non-commuting involution pairs in {len(members)} groups with alpha = 3/4')
    d8 = dihedral(8)
    for member in members:
        g = member.group
        z = center(g)
        involutions = [x for x in involution_set(g) if x != 0]
        for i, x in enumerate(involutions):
            for y in involutions[i + 1:]:
                if g.commute(x, y):
                    continue
                tally.hypothesis()
                d = generated_subgroup(g, [x, y])
                xy = g.multiply(x, y)
                a = generated_subgroup(g, [g.multiply(xy, xy)])
                ok = (len(d) == 8 and is_isomorphic(subgroup_as_group(g, d), d8) is not None
                      and (d & z) == a)
                tally.record(ok, f'{member.label} <{x}, {y}>', f'|<x,y>| = {len(d)}')
    return tally.result

def aut_d8(population):
    tally = _tally('aut-d8', 'Aut(D8)')
    d8 = dihedral(8)
    aut, perms = automorphism_group(d8)
    tally.hypothesis()
    tally.record(aut.order == 8, 'Aut(D8)', f'order {aut.order}')
    tally.record(is_isomorphic(aut, d8) is not None, 'Aut(D8)', 'not isomorphic to D8')
    involutory = [perms[i] for i in involution_set(aut)]
    tally.record(len(involutory) == 6, 'Aut(D8)', f'{len(involutory)} elements of order at most 2')
    counts = [inverted_element_count(d8, beta) for beta in involutory]
    tally.record(all(c <= 6 for c in counts), 'Aut(D8)', f'inversion counts {counts}')
    tally.record(sum(1 for c in counts if c == 6) == 3, 'Aut(D8)', f'inversion counts {counts}')
    tally.record(all(inverted_element_count(d8, beta) < 8 for beta in perms), 'Aut(D8)',
                 'an automorphism inverts every element')
    return tally.result

def catalog_oracle(population):
    top = min(population.enumerate_up_to, population.max_order)
    tally = _tally('catalog-oracle', f'orders 1..{top} by Cayley-table search')
    by_order = catalog_by_order(population.catalog)
    for n in range(1, top + 1):
        tally.hypothesis()
        found = brute_force_enumerate(n)
        listed = by_order.get(n, [])
        ok = (len(found) == len(listed)
              and all(find_isomorphic(entry.group, listed) is not None for entry in found)
              and all(find_isomorphic(entry.group, found) is not None for entry in listed))
        tally.record(ok, f'order {n}', f'{len(found)} classes found, {len(listed)} in the catalog')
    return tally.result

CHECKS = (
    ('abelian-involution-subgroup', abelian_involution_subgroup),
    ('abelian-half-corollary', abelian_half_corollary),
    ('dihedral-closed-form', dihedral_closed_form),
    ('dihedral-three-quarters', dihedral_three_quarters),
    ('direct-product-lemma', direct_product_lemma),
    ('normal-subgroup-bound', normal_subgroup_bound),
    ('central-subgroup-bound', central_subgroup_bound),
    ('semidirect-characterization', semidirect_characterization),
    ('semidirect-coset-count', semidirect_coset_count),
    ('sylow-bound', sylow_bound),
    ('sylow-self-normalizing', sylow_self_normalizing),
    ('center-elementary-abelian', center_elementary_abelian),
    ('center-strictness', center_strictness),
    ('center-trivial-witness', center_trivial_witness),
    ('edmonds-bound', edmonds_bound),
    ('edmonds-proportion', edmonds_proportion),
    ('edmonds-equality-case', edmonds_equality_case),
    ('two-thirds-corollary', two_thirds_corollary),
    ('involutions-generate', involutions_generate),
    ('main-theorem', main_theorem),
    ('three-quarters-classification', three_quarters_classification),
    ('surjection-lemma', surjection_lemma),
    ('dihedral-meets-center', dihedral_meets_center),
    ('aut-d8', aut_d8),
    ('catalog-oracle', catalog_oracle),
)

CHECK_FUNCTIONS = dict(CHECKS)
