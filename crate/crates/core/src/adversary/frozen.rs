//! Coordinates frozen from `search` runs; see `regenerate_frozen_literals`.

/// `(x, y, rotation)` of eight unit squares around the axis-parallel unit
/// square at the origin; overlap with the core and pairwise gaps are at least
/// 0.006.
pub(crate) const CONGRUENT_SQUARES: [[f64; 3]; 8] = [
    [
        0.04495794938152088,
        -0.14085328591799645,
        2.7061765158044255,
    ],
    [1.0815484392353945, 0.8786802507534212, -0.20080594498743942],
    [0.06849005952264556, 1.054108699878082, 1.4138212629347549],
    [-1.0440219567290425, 0.9322638011322298, 0.10612097190683614],
    [-1.1673732869178395, -0.2880696211978018, 1.0952528375732704],
    [
        -0.42405340596006386,
        -1.0565496789884468,
        1.0932035053698381,
    ],
    [0.6658296803191226, -1.1725707189549615, 1.0661518055315011],
    [1.1708739380254343, -0.3015500865573415, 1.0654274733533184],
];

/// Eleven centers within radius 2.98 of the origin, pairwise at least 2.02 apart.
pub(crate) const ELEVEN_DISKS: [[f64; 2]; 11] = [
    [-1.0137926107798885, -0.2237999829654107],
    [0.8625902408011984, 0.537133423464964],
    [-2.478041648725342, -1.650525317120224],
    [2.8964604710682558, 0.6467081580194822],
    [-0.1456152458578446, 2.96002072978263],
    [-0.8390462602948583, -2.8588253695387307],
    [-2.05295447913266, 2.150897646724067],
    [0.6305268609108294, -1.471066855642873],
    [1.796498615332268, 2.3753517358495864],
    [2.6494693209591142, -1.3630564131470206],
    [-2.95718380836103, 0.33015617907122646],
];
