#pragma once

// Named reference inputs. The same byte-for-byte content ships under data/
// for CLI use; tests assert the two stay in sync.

#include <string>

#include "ballotrank/profile.hpp"

namespace ballotrank::fixtures {

Profile toy();       // a undefeated, c defeated by all but d
Profile iia2();      // reorders a/b relative to toy() on unchanged a-b votes
Profile mono1();     // raising a in mono1 demotes a (see mono2)
Profile mono2();
Profile lnh1();      // truncated ballots; extending one flips the winner
Profile lnh2();
Profile noshow1();   // adding two a-last voters moves the win away from a
Profile noshow2();
Profile clone1();    // cloning a flips the win to b (see clone2)
Profile clone2();

MarginMatrix oakland();      // 3-candidate cycle, 2010 mayoral margins
MarginMatrix minneapolis();  // 5 candidates, top-3 cycle, 2021 ward margins

// Raw file text backing the fixture, keyed by the lowercase names above.
const std::string& text(const std::string& name);

}  // namespace ballotrank::fixtures
