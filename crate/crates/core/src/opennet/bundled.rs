use super::parse::{parse_nets, NetModel};

/// The example nets shipped with the library.  Every net has the single
/// input place `$`, except `S2`, which has inputs `x` and `y`.
pub const BUNDLED_SOURCE: &str = "\
net N1
places a b $
inputs $
trans t1 label alpha pre a post b
trans t2 label beta pre b $ post b
marking a = a

net N2
places c d $
inputs $
trans t1 label alpha pre c $^5 post d
trans t2 label beta pre d post d
marking c = c

net N3
places e f g h i $
inputs $
trans t1 label alpha pre e $^3 post f
trans t2 label beta pre f post g
trans t3 label beta pre g post h
trans t4 label beta pre h post i
trans t5 label beta pre i $ post i
marking e = e

net N4
places l m n o p q $
inputs $
trans t1 label alpha pre l $^3 post m
trans t2 label alpha pre l post q
trans t3 label beta pre m post n
trans t4 label beta pre n post o
trans t5 label beta pre o post p
trans t6 label beta pre p $ post p
trans t7 label beta pre q $ post q
marking l = l

net N5
places r s t $
inputs $
trans t1 label alpha pre r $^5 post s
trans t2 label alpha pre r post t
trans t3 label beta pre s post s
trans t4 label beta pre t $ post t
marking r = r

net S2
places a b c d z x y
inputs x y
trans t1 label alpha pre a x post c
trans t2 label alpha pre b x post c
trans t3 label alpha pre a x y post d
trans t4 label beta pre c y post z
trans t5 label beta pre d post z
trans t6 label beta pre d y post z y
marking s2a = a
marking s2b = b
marking s2d = d
";

pub fn bundled() -> NetModel {
    parse_nets(BUNDLED_SOURCE).expect("bundled nets parse")
}
