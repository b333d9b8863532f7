use pimvar_core::gstb::{enumerate, SearchRegime};
fn main() {
    let mut cum = 0usize;
    let mut prev = 0usize;
    for u in 1..=8u8 {
        let n = enumerate(SearchRegime::SingleMVarMultiUse(u)).len();
        let this = n - prev;
        cum = n;
        println!("u={u}: count(u)={this} cumulative={cum}");
        prev = n;
    }
}
