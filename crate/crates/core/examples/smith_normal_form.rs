//! Smith normal form and finitely generated abelian groups.

use gproj::kgroups::{group_from_relations, smith_normal_form};
use num_bigint::BigInt;

fn int(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn main() -> gproj::Result<()> {
    let a = int(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let s = smith_normal_form(&a, 3);
    println!("diagonal: {:?}", s.diagonal().iter().map(|d| d.to_string()).collect::<Vec<_>>());
    println!("U = {:?}", s.u);
    println!("V = {:?}", s.v);

    let g = group_from_relations(vec!["[R]".into(), "[k]".into()], int(&[&[1, -2]]))?;
    println!("<[R], [k] | [R] = 2[k]> = {g}");
    let h = group_from_relations(vec!["a".into(), "b".into()], int(&[&[2, 0], &[0, 3]]))?;
    println!("<a, b | 2a, 3b> = {h}");
    Ok(())
}
