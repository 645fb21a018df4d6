//! Rendered expansions against the lists printed with the recursions.

use billiard_core::recursions::{b_expansion, bt_expansion, f_expansion, h_expansion, render_f_tiles};

const F_LISTS: &[(usize, &str)] = &[
    (3, "(f_2^±,A^±)+(f_2^∓,A^∓)"),
    (4, "(f_3,A^±)+(f_2^±,f_2^∓,A^∓)"),
    (5, "(f_3,C)+(f_2^±,f_2^∓,A^∓,A^±)"),
    (6, "(f_3,[C,A^±]+[A^±,f_2^∓,A^∓])+(f_2^±,f_2^∓,A^∓,C)"),
    (7, "(f_3,C,C)+(f_3,A^±,f_2^∓,A^∓,A^±)+(f_2^±,f_2^∓,A^∓,[C,A^±]+[A^±,f_2^∓,A^∓])"),
    (8, "(f_3,C,[C,A^±]+[A^±,f_2^∓,A^∓])+(f_3,A^±,f_2^∓,A^∓,C)+(f_2^±,f_2^∓,A^∓,C,C)+(f_2^±,f_2^∓,A^∓,A^±,f_2^∓,A^∓,A^±)"),
    (9, "(f_3,C,C,C)+(f_3,C,A^±,f_2^∓,A^∓,A^±)+(f_3,A^±,f_2^∓,A^∓,[C,A^±]+[A^±,f_2^∓,A^∓])+(f_2^±,f_2^∓,A^∓,C,[C,A^±]+[A^±,f_2^∓,A^∓])+(f_2^±,f_2^∓,A^∓,A^±,f_2^∓,A^∓,C)"),
    (10, "(f_3,C,C,[C,A^±]+[A^±,f_2^∓,A^∓])+(f_3,C,A^±,f_2^∓,A^∓,C)+(f_3,A^±,f_2^∓,A^∓,C,C)+(f_3,A^±,f_2^∓,A^∓,A^±,f_2^∓,A^∓,A^±)+(f_2^±,f_2^∓,A^∓,C,C,C)+(f_2^±,f_2^∓,A^∓,C,A^±,f_2^∓,A^∓,A^±)+(f_2^±,f_2^∓,A^∓,A^±,f_2^∓,A^∓,[C,A^±]+[A^±,f_2^∓,A^∓])"),
];

const TILE_LISTS: &[(usize, &str)] = &[
    (4, "(S_2,V)+(S_1,H)"),
    (5, "(S_2,C)+(S_1,H,V)"),
    (6, "(S_2,[C,V]+[V,H])+(S_1,H,C)"),
    (7, "(S_2,C,C)+(S_2,V,H,V)+(S_1,H,[C,V]+[V,H])"),
    (8, "(S_2,C,[C,V]+[V,H])+(S_2,V,H,C)+(S_1,H,C,C)+(S_1,H,V,H,V)"),
    (9, "(S_2,C,C,C)+(S_2,C,V,H,V)+(S_2,V,H,[C,V]+[V,H])+(S_1,H,C,[C,V]+[V,H])+(S_1,H,V,H,C)"),
    (10, "(S_2,C,C,[C,V]+[V,H])+(S_2,C,V,H,C)+(S_2,V,H,C,C)+(S_2,V,H,V,H,V)+(S_1,H,C,C,C)+(S_1,H,C,V,H,V)+(S_1,H,V,H,[C,V]+[V,H])"),
];

/// As printed, except that the `g_2` summand of the even `Q_4` is followed by
/// `N`, not `K`; the oracle sweep over `T(5,5)` and `T(5,6)` rejects `K`.
const H_LISTS: &[(usize, &str)] = &[
    (4, "(h_3,P_1)+(h_2,P_2)+(M,L)+(S,A^∓,A^±)"),
    (5, "([h_3,P_1]+[h_2,P_2]+[M,L]+[S,A^∓,A^±],P_1)+(h_3,P̃_2)+(h_2,P_3)+(M,K,A^±)+(g_2,K,A^±,A^∓)"),
    (6, "([h_3,P_1]+[h_2,P_2]+[M,L]+[S,A^∓,A^±],[P_2]+[P_1,P_1])+([h_3,P̃_2]+[h_2,P_3]+[M,K,A^±]+[g_2,K,A^±,A^∓],P_1)+(h_3,P̃_3)+(h_2,P_4)+(M,K,L)+(S,Ñ,A^∓,A^±)"),
];

const B_LISTS: &[(usize, &str)] = &[
    (3, "(h_2,A^±)+(M)"),
    (4, "(h_3,_,A^±)+(h_2,A^±,f_2^∓,_,A^∓)+(M,f_2^∓,_,A^∓)"),
    (5, "(h_4,A^±)+(h_3,L)+(h_2,A^±,K)+(M,K)"),
    (6, "(h_5,_,A^±)+(h_4,A^±,f_2^∓,_,A^∓)+(h_3,L,f_2^∓,_,A^∓)+(h_2,A^±,K,f_2^∓,_,A^∓)+(M,K,f_2^∓,_,A^∓)"),
    (7, "(h_6,A^±)+(h_5,L)+(h_4,A^±,K)+(h_3,L,K)+(h_2,A^±,K,K)+(M,K,K)"),
    (8, "(h_7,_,A^±)+(h_6,A^±,f_2^∓,_,A^∓)+(h_5,L,f_2^∓,_,A^∓)+(h_4,A^±,K,f_2^∓,_,A^∓)+(h_3,L,K,f_2^∓,_,A^∓)+(h_2,A^±,K,K,f_2^∓,_,A^∓)+(M,K,K,f_2^∓,_,A^∓)"),
    (9, "(h_8,A^±)+(h_7,L)+(h_6,A^±,K)+(h_5,L,K)+(h_4,A^±,K,K)+(h_3,L,K,K)+(h_2,A^±,K,K,K)+(M,K,K,K)"),
    (10, "(h_9,_,A^±)+(h_8,A^±,f_2^∓,_,A^∓)+(h_7,L,f_2^∓,_,A^∓)+(h_6,A^±,K,f_2^∓,_,A^∓)+(h_5,L,K,f_2^∓,_,A^∓)+(h_4,A^±,K,K,f_2^∓,_,A^∓)+(h_3,L,K,K,f_2^∓,_,A^∓)+(h_2,A^±,K,K,K,f_2^∓,_,A^∓)+(M,K,K,K,f_2^∓,_,A^∓)"),
];

const BT_LISTS: &[(usize, &str)] = &[
    (3, "(h_2,X)+(S)"),
    (4, "(h_3,X)+(h_2,R)+(g_2,N)"),
    (5, "(h_4,X)+(h_3,R̃)+(h_2,X,Ñ)+(S,Ñ)"),
    (6, "(h_5,X)+(h_4,R)+(h_3,X,N)+(h_2,R,N)+(g_2,N,N)"),
    (7, "(h_6,X)+(h_5,R̃)+(h_4,X,Ñ)+(h_3,R̃,Ñ)+(h_2,X,Ñ,Ñ)+(S,Ñ,Ñ)"),
    (8, "(h_7,X)+(h_6,R)+(h_5,X,N)+(h_4,R,N)+(h_3,X,N,N)+(h_2,R,N,N)+(g_2,N,N,N)"),
    (9, "(h_8,X)+(h_7,R̃)+(h_6,X,Ñ)+(h_5,R̃,Ñ)+(h_4,X,Ñ,Ñ)+(h_3,R̃,Ñ,Ñ)+(h_2,X,Ñ,Ñ,Ñ)+(S,Ñ,Ñ,Ñ)"),
    (10, "(h_9,X)+(h_8,R)+(h_7,X,N)+(h_6,R,N)+(h_5,X,N,N)+(h_4,R,N,N)+(h_3,X,N,N,N)+(h_2,R,N,N,N)+(g_2,N,N,N,N)"),
];

#[test]
fn f_lists() {
    for &(b, printed) in F_LISTS {
        assert_eq!(f_expansion(b).unwrap().to_string(), printed, "f_{b}");
    }
}

#[test]
fn tile_lists() {
    for &(b, printed) in TILE_LISTS {
        assert_eq!(render_f_tiles(b), printed, "f_{b}");
    }
}

#[test]
fn h_lists() {
    for &(b, printed) in H_LISTS {
        let corrected = printed.replace("g_2,K,", "g_2,N,");
        assert_eq!(h_expansion(b).unwrap().to_string(), corrected, "h_{b}");
    }
}

#[test]
fn b_lists() {
    for &(n, printed) in B_LISTS {
        assert_eq!(b_expansion(n).unwrap().to_string(), printed, "b_{n}");
    }
}

#[test]
fn bt_lists() {
    for &(n, printed) in BT_LISTS {
        assert_eq!(bt_expansion(n).unwrap().to_string(), printed, "bt_{n}");
    }
}
