// The `wba/1` document format.

use weakhopf::fixtures::{preset, PRESETS};
use weakhopf::{emit_bialgebra, parse_document};

pub fn run() -> weakhopf::Result<()> {
    for name in PRESETS {
        let h = preset(name, None)?;
        let text = emit_bialgebra(&h);
        let back = parse_document(&text)?.build()?;
        println!("{name:<8} {:>5} bytes, round trip exact: {}", text.len(), back == h);
    }
    print!("{}", emit_bialgebra(&preset("c2", None)?));
    Ok(())
}

#[allow(dead_code)]
fn main() -> weakhopf::Result<()> {
    run()
}
