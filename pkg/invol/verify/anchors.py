'''The statement each check verifies, quoted, and the results the check suite covers.'''

ANCHORS = {
    'abelian-involution-subgroup': 'If G is abelian then J(G) is a subgroup and j(G) is a power of 2, dividing |G|',
    'abelian-half-corollary': 'If G is abelian and α(G) > 1/2, then G is an elementary abelian 2-group',
    'dihedral-closed-form': 'j(D_2n) = n+1 if n is odd, n+2 if n is even',
    'dihedral-three-quarters': 'α(D_2n) ≤ 3/4 unless n=2 and the dihedral group is actually elementary abelian',
    'direct-product-lemma': 'If G = H × K, then J(G) = J(H) × J(K), so j(G)=j(H)×j(K) and α(G) = α(H) × α(K)',
    'normal-subgroup-bound': 'j(G) ≤ |H| × j(G/H) and α(G) ≤ α(G/H) for a normal subgroup H',
    'central-subgroup-bound': 'j(G) ≤ j(G/H)j(H) for a central subgroup H',
    'semidirect-characterization': 'J(G) = {nq : n ∈ N, q ∈ Q, q² = 1, qnq=n^{-1}} for G = NQ ≅ N ⋊ Q',
    'semidirect-coset-count': 'the involutions in the coset Nq correspond to the elements of N inverted by q',
    'sylow-bound': 'α(G) ≤ |S|/|N| for S a Sylow 2-subgroup and N = N_G(S)',
    'sylow-self-normalizing': 'If α(G) > 1/2 then N_G(S)=S',
    'center-elementary-abelian': 'If j(G) > |G|/2 then the center Z(G) is an elementary abelian 2-group',
    'center-strictness': 'For G = C4 × (C2)^{n−2}, j(G) = 2^{n−1} = |G|/2 and Z(G) = G, which is not an elementary abelian 2-group',
    'center-trivial-witness': 'The center of D_2n is trivial for n odd, so the elementary abelian center may be trivial',
    'edmonds-bound': 'If |G| = 2^n m, m odd, then j(G) ≤ 2^{n−1}(m+1)',
    'edmonds-proportion': 'If |G| = 2^n m, m odd, then α(G) ≤ 1/2 + 1/(2m)',
    'edmonds-equality-case': 'a finite group with j(G) = 2^{n−1}(m+1) is the direct product of C2^{n−1} and a group '
                             'of order 2m of dihedral type',
    'two-thirds-corollary': 'If m > 1, then α(G) ≤ 2/3',
    'involutions-generate': 'If α(G) > 1/2 then G is generated by its involutions',
    'main-theorem': 'If G is a finite group and α(G) > 3/4, then G is an elementary abelian 2-group',
    'three-quarters-classification': 'If α(G) = 3/4, then |G| = 2^n, n ≥ 3, and G ≅ D8 × C2^{n−3}',
    'surjection-lemma': 'suppose there is a surjection π: G → D8 with elementary abelian kernel; then the semidirect '
                        'product is in fact a direct product',
    'dihedral-meets-center': 'Then ⟨x,y⟩ ≅ D8 and D8 ∩ Z = ⟨a⟩',
    'aut-d8': 'Among the 8 automorphisms there are 6 involutions. Three of them, including the identity, '
              'invert 6 elements',
    'catalog-oracle': 'inspection of the lists of groups of small order, at most 8',
}

# every stated result in scope, with the checks that cover it
IN_SCOPE = {
    'involution definitions': ('dihedral-closed-form', 'abelian-involution-subgroup'),
    'abelian groups': ('abelian-involution-subgroup',),
    'abelian corollary': ('abelian-half-corollary',),
    'dihedral example': ('dihedral-closed-form', 'dihedral-three-quarters'),
    'direct-product lemma': ('direct-product-lemma',),
    'normal-subgroup lemma': ('normal-subgroup-bound',),
    'central-subgroup lemma': ('central-subgroup-bound',),
    'semidirect-product lemma': ('semidirect-characterization', 'semidirect-coset-count'),
    'Sylow bound': ('sylow-bound',),
    'self-normalizing corollary': ('sylow-self-normalizing',),
    'center proposition': ('center-elementary-abelian', 'center-trivial-witness'),
    'center sharpness example': ('center-strictness',),
    'Edmonds theorem': ('edmonds-bound', 'edmonds-proportion'),
    'two-thirds corollary': ('two-thirds-corollary',),
    'dihedral-type equality case': ('edmonds-equality-case',),
    'main theorem': ('main-theorem', 'involutions-generate'),
    'surjection lemma': ('surjection-lemma', 'dihedral-meets-center'),
    'three-quarters classification': ('three-quarters-classification',),
    'Aut(D8) facts': ('aut-d8',),
    'small group lists': ('catalog-oracle',),
}
