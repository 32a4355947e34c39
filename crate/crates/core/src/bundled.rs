//! The sample corpus shipped in `data/bundled.corpus`.
//!
//! Most records come from the family builders; a few groups with no family
//! of their own are entered by generators.

use crate::constructions::{abelian_invariant_factor_lists, FamilySpec};
use crate::corpus::GroupRecord;
use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Records built from family specs, keyed by the spec text.
pub fn family_specs() -> Vec<String> {
    let mut specs = Vec::new();
    specs.extend((1..=64).map(|n| format!("cyclic:{n}")));
    for factors in abelian_invariant_factor_lists(64) {
        if factors.len() > 1 {
            let parts: Vec<String> = factors.iter().map(ToString::to_string).collect();
            specs.push(format!("abelian:{}", parts.join(",")));
        }
    }
    specs.extend((3..=32).map(|n| format!("dihedral:{n}")));
    specs.extend((2..=16).map(|m| format!("dicyclic:{m}")));
    specs.extend((1..=6).map(|n| format!("symmetric:{n}")));
    specs.extend((3..=6).map(|n| format!("alternating:{n}")));
    specs.extend(["sylnorm:3", "sylnorm:5", "sylnorm:7"].map(String::from));
    specs.push("wreath-sylnorm:3:2".into());
    for (a, b) in [
        ("symmetric:3", "symmetric:3"),
        ("symmetric:3", "cyclic:2"),
        ("symmetric:3", "cyclic:3"),
        ("symmetric:3", "cyclic:4"),
        ("symmetric:3", "dicyclic:2"),
        ("symmetric:4", "cyclic:2"),
        ("symmetric:4", "symmetric:3"),
        ("dicyclic:2", "cyclic:3"),
        ("dicyclic:2", "dicyclic:2"),
        ("cyclic:3", "cyclic:3"),
        ("cyclic:4", "cyclic:6"),
        ("sylnorm:5", "cyclic:2"),
        ("sylnorm:7", "cyclic:2"),
        ("dihedral:4", "symmetric:3"),
    ] {
        specs.push(format!("direct:{a}/{b}"));
    }
    specs.extend(
        ["wreath:cyclic:2/cyclic:2", "wreath:cyclic:3/cyclic:2", "wreath:symmetric:3/cyclic:2"]
            .map(String::from),
    );
    specs
}

/// Action of 2x2 matrices over `F_3` on the eight nonzero vectors, as
/// images of the points `3x + y` listed without the zero vector.
fn f3_matrix_action(matrices: &[[u32; 4]]) -> Result<PermGroup> {
    let vectors: Vec<(u32, u32)> = (1..9).map(|i| (i / 3, i % 3)).collect();
    let gens = matrices
        .iter()
        .map(|m| {
            let images = vectors
                .iter()
                .map(|&(x, y)| {
                    let v = ((m[0] * x + m[1] * y) % 3, (m[2] * x + m[3] * y) % 3);
                    vectors.iter().position(|&w| w == v).expect("nonzero image") as u32
                })
                .collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(8, gens)
}

/// `C_5^2 ⋊ Q_8` on the 25 points of `F_5^2`: two translations, and the
/// maps `(x, y) ↦ (4y, x)` and `(x, y) ↦ (2x, 3y)`.
fn affine_q8() -> Result<PermGroup> {
    let map = |f: &dyn Fn(u32, u32) -> (u32, u32)| {
        let images = (0..25)
            .map(|i| {
                let (x, y) = f(i / 5, i % 5);
                (x % 5) * 5 + y % 5
            })
            .collect();
        Permutation::from_images(images)
    };
    PermGroup::new(
        25,
        vec![
            map(&|x, y| (x + 1, y))?,
            map(&|x, y| (x, y + 1))?,
            map(&|x, y| (4 * y, x))?,
            map(&|x, y| (2 * x, 3 * y))?,
        ],
    )
}

fn hand_entered() -> Result<Vec<GroupRecord>> {
    let sl23 = f3_matrix_action(&[[1, 1, 0, 1], [1, 0, 1, 1]])?;
    let gl23 = f3_matrix_action(&[[1, 1, 0, 1], [1, 0, 1, 1], [2, 0, 0, 1]])?;
    let sylow2_noncut = PermGroup::from_cycle_strings(
        12,
        &[
            "(1 5)(2 8)(4 6)(9 12 11)",
            "(2 6)(4 8)(9 10 11 12)",
            "(1 4 7 2 5 8 3 6)(9 10 12 11)",
        ],
    )?;
    let m11 = PermGroup::from_cycle_strings(
        11,
        &["(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"],
    )?;
    Ok(vec![
        GroupRecord::from_group("sl23-vectors", &sl23)
            .with_name("SL(2,3) on the nonzero vectors of F_3^2")
            .with_tags(["matrix", "solvable"]),
        GroupRecord::from_group("gl23-vectors", &gl23)
            .with_name("GL(2,3) on the nonzero vectors of F_3^2")
            .with_tags(["matrix", "solvable"]),
        GroupRecord::from_group("affine-c5sq-q8", &affine_q8()?)
            .with_name("C_5^2 : Q_8 acting on F_5^2")
            .with_tags(["affine", "rational", "solvable"]),
        GroupRecord::from_group("sylow2-noncut-384", &sylow2_noncut)
            .with_name("cut group of order 384 inside Hol(C_8) x S_4")
            .with_tags(["sylow2"]),
        GroupRecord::from_group("mathieu-11", &m11)
            .with_name("Mathieu group M11")
            .with_tags(["simple"]),
    ])
}

/// Every record of the bundled corpus, in file order.
pub fn bundled_records() -> Result<Vec<GroupRecord>> {
    let mut records = Vec::new();
    for spec in family_specs() {
        let family: FamilySpec = spec.parse()?;
        let group = family.build()?;
        let tag = spec.split(':').next().unwrap_or(&spec).to_string();
        records.push(
            GroupRecord::from_group(spec.clone(), &group)
                .with_name(family.to_string())
                .with_tags([tag]),
        );
    }
    records.extend(hand_entered()?);
    Ok(records)
}

/// The text of `data/bundled.corpus`.
pub fn bundled_corpus_text() -> Result<String> {
    let mut text = String::from(
        "# Sample corpus: small families plus a few hand-entered groups.\n\
         # Regenerate with `cargo run --example build_corpus`.\n\n",
    );
    text.push_str(&crate::corpus::write_corpus(&bundled_records()?));
    Ok(text)
}
