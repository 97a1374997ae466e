from .stats import InvolutionStats, dihedral_alpha_closed_form, dihedral_j_closed_form, involution_set, stats
from .bounds import BoundCheck, check_central_bound, check_edmonds_bound, check_edmonds_proportion_bound, \
    check_normal_bound, check_semidirect_characterization, check_sylow_bound, check_two_thirds_bound, \
    coset_involution_counts
