#include "lep/corpus.hpp"

namespace lep {

const std::vector<GoldenProof>& golden_proofs() {
  static const std::vector<GoldenProof> proofs{
      {"peirce", System::LE,
       R"lep(; Peirce's law, ((A ->c B) ->c A) ->c A
(impc_i (x3 "(A ->c B) ->c A") "A"
  (cc "A"
    (impc_e
      (hyp x3 "(A ->c B) ->c A")
      (impc_i (x1 "A") "B"
        (wc "B"
          (der
            (hyp x1 "A"))))
      (x2 "A")
      (der
        (hyp x2 "A")))))
)lep",
       "⊢ · ; ((A ->c B) ->c A) ->c A", 0},
      {"excluded_middle", System::LE,
       R"lep(; Classical excluded middle, A \/c ~A
(orc_i "A" "~A"
  (der
    (neg_i (x1 "A")
      (der
        (hyp x1 "A")))))
)lep",
       "⊢ · ; A \\/c ~A", 0},
      {"dummett", System::LE,
       R"lep(; Dummett's linearity axiom with classical connectives
(orc_i "A ->c B" "B ->c A"
  (der
    (impc_i (x2 "B") "A"
      (der
        (impc_i (x1 "A") "B"
          (wc "B"
            (der
              (hyp x1 "A"))))))))
)lep",
       "⊢ · ; (A ->c B) \\/c (B ->c A)", 0},
      {"andy_detour", System::LE,
       R"lep(; A conjunction introduced and immediately eliminated
(and_e1
  (and_i
    (hyp x "A")
    (hyp y "B")))
)lep",
       "A, B ⊢ · ; A", 1},
      {"excluded_middle", System::NE,
       R"lep(; Excluded middle in the natural deduction system
(orc_i (u "~A") (v "~~A")
  (neg_e
    (neg_i (x "A")
      (neg_e
        (hyp x "A")
        (hyp u "~A")))
    (hyp v "~~A")))
)lep",
       "⊢ A \\/c ~A", 0},
      {"peirce", System::NE,
       R"lep(; Peirce's law in the natural deduction system
(impc_i (h "(A ->c B) ->c A") (n "~A")
  (impc_e
    (hyp h "(A ->c B) ->c A")
    (impc_i (a "A") (m "~B")
      (neg_e
        (hyp a "A")
        (hyp n "~A")))
    (hyp n "~A")))
)lep",
       "⊢ ((A ->c B) ->c A) ->c A", 0},
  };
  return proofs;
}

}  // namespace lep
