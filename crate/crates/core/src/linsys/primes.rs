// Generated: the 1024 largest primes below 2^62, descending.

pub(crate) static PRIMES: [u64; 1024] = [
    0x3fffffffffffffc7, 0x3fffffffffffffa9, 0x3fffffffffffff8b, 0x3fffffffffffff71,
    0x3fffffffffffff67, 0x3fffffffffffff59, 0x3fffffffffffff55, 0x3fffffffffffff3d,
    0x3fffffffffffff35, 0x3ffffffffffffeef, 0x3ffffffffffffee1, 0x3ffffffffffffec3,
    0x3ffffffffffffe45, 0x3ffffffffffffe1d, 0x3ffffffffffffe11, 0x3ffffffffffffdc1,
    0x3ffffffffffffdbb, 0x3ffffffffffffda5, 0x3ffffffffffffd87, 0x3ffffffffffffd69,
    0x3ffffffffffffd03, 0x3ffffffffffffcfb, 0x3ffffffffffffcf7, 0x3ffffffffffffce9,
    0x3ffffffffffffcd3, 0x3ffffffffffffcc1, 0x3ffffffffffffc65, 0x3ffffffffffffc2b,
    0x3ffffffffffffc1f, 0x3ffffffffffffc17, 0x3ffffffffffffc11, 0x3ffffffffffffc07,
    0x3ffffffffffffb53, 0x3ffffffffffffb27, 0x3ffffffffffffaf3, 0x3ffffffffffffab7,
    0x3ffffffffffffa67, 0x3ffffffffffffa15, 0x3ffffffffffff9ef, 0x3ffffffffffff9d9,
    0x3ffffffffffff9d3, 0x3ffffffffffff9c5, 0x3ffffffffffff9af, 0x3ffffffffffff977,
    0x3ffffffffffff95f, 0x3ffffffffffff95b, 0x3ffffffffffff959, 0x3ffffffffffff8e1,
    0x3ffffffffffff8a7, 0x3ffffffffffff889, 0x3ffffffffffff87d, 0x3ffffffffffff805,
    0x3ffffffffffff7e7, 0x3ffffffffffff7c9, 0x3ffffffffffff7a3, 0x3ffffffffffff775,
    0x3ffffffffffff757, 0x3ffffffffffff739, 0x3ffffffffffff713, 0x3ffffffffffff6d1,
    0x3ffffffffffff6c1, 0x3ffffffffffff6b9, 0x3ffffffffffff6a3, 0x3ffffffffffff68b,
    0x3ffffffffffff631, 0x3ffffffffffff613, 0x3ffffffffffff5e9, 0x3ffffffffffff59b,
    0x3ffffffffffff58d, 0x3ffffffffffff53f, 0x3ffffffffffff527, 0x3ffffffffffff517,
    0x3ffffffffffff4d3, 0x3ffffffffffff4b5, 0x3ffffffffffff491, 0x3ffffffffffff431,
    0x3ffffffffffff41f, 0x3ffffffffffff36b, 0x3ffffffffffff34d, 0x3ffffffffffff349,
    0x3ffffffffffff347, 0x3ffffffffffff341, 0x3ffffffffffff30b, 0x3ffffffffffff2cf,
    0x3ffffffffffff23f, 0x3ffffffffffff22f, 0x3ffffffffffff227, 0x3ffffffffffff221,
    0x3ffffffffffff215, 0x3ffffffffffff1a9, 0x3ffffffffffff187, 0x3ffffffffffff149,
    0x3ffffffffffff12b, 0x3ffffffffffff125, 0x3ffffffffffff0df, 0x3ffffffffffff0a3,
    0x3fffffffffffefbd, 0x3fffffffffffef69, 0x3fffffffffffef4d, 0x3fffffffffffef33,
    0x3fffffffffffeee7, 0x3fffffffffffeecd, 0x3fffffffffffee7b, 0x3fffffffffffee33,
    0x3fffffffffffee0d, 0x3fffffffffffeddf, 0x3fffffffffffedcb, 0x3fffffffffffed9d,
    0x3fffffffffffed53, 0x3fffffffffffed31, 0x3fffffffffffed2b, 0x3fffffffffffed07,
    0x3fffffffffffecef, 0x3fffffffffffeccb, 0x3fffffffffffecb3, 0x3fffffffffffec95,
    0x3fffffffffffec81, 0x3fffffffffffec7b, 0x3fffffffffffec75, 0x3fffffffffffec41,
    0x3fffffffffffec11, 0x3fffffffffffebf3, 0x3fffffffffffebdf, 0x3fffffffffffeb6f,
    0x3fffffffffffeb15, 0x3fffffffffffeaef, 0x3fffffffffffeabb, 0x3fffffffffffeaa7,
    0x3fffffffffffea9d, 0x3fffffffffffea95, 0x3fffffffffffea55, 0x3fffffffffffea3d,
    0x3fffffffffffe9fb, 0x3fffffffffffe9f3, 0x3fffffffffffe9c3, 0x3fffffffffffe975,
    0x3fffffffffffe953, 0x3fffffffffffe947, 0x3fffffffffffe905, 0x3fffffffffffe903,
    0x3fffffffffffe8e5, 0x3fffffffffffe8d9, 0x3fffffffffffe8c9, 0x3fffffffffffe899,
    0x3fffffffffffe875, 0x3fffffffffffe86d, 0x3fffffffffffe857, 0x3fffffffffffe851,
    0x3fffffffffffe843, 0x3fffffffffffe815, 0x3fffffffffffe809, 0x3fffffffffffe7fd,
    0x3fffffffffffe7af, 0x3fffffffffffe7a3, 0x3fffffffffffe77f, 0x3fffffffffffe777,
    0x3fffffffffffe74d, 0x3fffffffffffe749, 0x3fffffffffffe743, 0x3fffffffffffe6f5,
    0x3fffffffffffe6e7, 0x3fffffffffffe683, 0x3fffffffffffe653, 0x3fffffffffffe63b,
    0x3fffffffffffe627, 0x3fffffffffffe61d, 0x3fffffffffffe5f7, 0x3fffffffffffe555,
    0x3fffffffffffe507, 0x3fffffffffffe4a1, 0x3fffffffffffe47d, 0x3fffffffffffe461,
    0x3fffffffffffe437, 0x3fffffffffffe38d, 0x3fffffffffffe359, 0x3fffffffffffe335,
    0x3fffffffffffe31d, 0x3fffffffffffe309, 0x3fffffffffffe29f, 0x3fffffffffffe291,
    0x3fffffffffffe28b, 0x3fffffffffffe285, 0x3fffffffffffe24f, 0x3fffffffffffe22b,
    0x3fffffffffffe1e5, 0x3fffffffffffe1b3, 0x3fffffffffffe179, 0x3fffffffffffe173,
    0x3fffffffffffe15f, 0x3fffffffffffe15b, 0x3fffffffffffe119, 0x3fffffffffffe0b1,
    0x3fffffffffffe04d, 0x3fffffffffffe047, 0x3fffffffffffe039, 0x3fffffffffffe029,
    0x3fffffffffffe009, 0x3fffffffffffdfd9, 0x3fffffffffffdfc3, 0x3fffffffffffdfbb,
    0x3fffffffffffdf7f, 0x3fffffffffffdf7b, 0x3fffffffffffdf61, 0x3fffffffffffdf4b,
    0x3fffffffffffdf37, 0x3fffffffffffdef7, 0x3fffffffffffde89, 0x3fffffffffffde77,
    0x3fffffffffffde67, 0x3fffffffffffde5b, 0x3fffffffffffde49, 0x3fffffffffffde3b,
    0x3fffffffffffde11, 0x3fffffffffffde01, 0x3fffffffffffddc5, 0x3fffffffffffdd89,
    0x3fffffffffffdd71, 0x3fffffffffffdd59, 0x3fffffffffffdd41, 0x3fffffffffffdd35,
    0x3fffffffffffdcf1, 0x3fffffffffffdcdb, 0x3fffffffffffdcd3, 0x3fffffffffffdcb7,
    0x3fffffffffffdc99, 0x3fffffffffffdc79, 0x3fffffffffffdbb9, 0x3fffffffffffdb7d,
    0x3fffffffffffdb25, 0x3fffffffffffdad7, 0x3fffffffffffda87, 0x3fffffffffffd9fd,
    0x3fffffffffffd9e7, 0x3fffffffffffd9cf, 0x3fffffffffffd9c1, 0x3fffffffffffd9a3,
    0x3fffffffffffd981, 0x3fffffffffffd94f, 0x3fffffffffffd907, 0x3fffffffffffd8d9,
    0x3fffffffffffd84d, 0x3fffffffffffd82b, 0x3fffffffffffd80d, 0x3fffffffffffd807,
    0x3fffffffffffd7f5, 0x3fffffffffffd7ad, 0x3fffffffffffd787, 0x3fffffffffffd77b,
    0x3fffffffffffd747, 0x3fffffffffffd741, 0x3fffffffffffd73f, 0x3fffffffffffd727,
    0x3fffffffffffd6f9, 0x3fffffffffffd6e5, 0x3fffffffffffd6bb, 0x3fffffffffffd68b,
    0x3fffffffffffd675, 0x3fffffffffffd66d, 0x3fffffffffffd645, 0x3fffffffffffd63d,
    0x3fffffffffffd5df, 0x3fffffffffffd5d3, 0x3fffffffffffd5c5, 0x3fffffffffffd591,
    0x3fffffffffffd58f, 0x3fffffffffffd579, 0x3fffffffffffd517, 0x3fffffffffffd4e9,
    0x3fffffffffffd48f, 0x3fffffffffffd48d, 0x3fffffffffffd44d, 0x3fffffffffffd439,
    0x3fffffffffffd42f, 0x3fffffffffffd409, 0x3fffffffffffd3f9, 0x3fffffffffffd3f7,
    0x3fffffffffffd3d5, 0x3fffffffffffd3b1, 0x3fffffffffffd39d, 0x3fffffffffffd361,
    0x3fffffffffffd345, 0x3fffffffffffd343, 0x3fffffffffffd31b, 0x3fffffffffffd2bf,
    0x3fffffffffffd277, 0x3fffffffffffd273, 0x3fffffffffffd26d, 0x3fffffffffffd22b,
    0x3fffffffffffd1d7, 0x3fffffffffffd1d1, 0x3fffffffffffd18d, 0x3fffffffffffd183,
    0x3fffffffffffd175, 0x3fffffffffffd159, 0x3fffffffffffd0f3, 0x3fffffffffffd0eb,
    0x3fffffffffffd0c9, 0x3fffffffffffd0af, 0x3fffffffffffd0a5, 0x3fffffffffffd087,
    0x3fffffffffffd07f, 0x3fffffffffffd073, 0x3fffffffffffd069, 0x3fffffffffffd01f,
    0x3fffffffffffcfd9, 0x3fffffffffffcfad, 0x3fffffffffffcf77, 0x3fffffffffffcf53,
    0x3fffffffffffcf1d, 0x3fffffffffffcf0d, 0x3fffffffffffcf01, 0x3fffffffffffceb1,
    0x3fffffffffffce9b, 0x3fffffffffffce95, 0x3fffffffffffce53, 0x3fffffffffffce3b,
    0x3fffffffffffce0f, 0x3fffffffffffcde7, 0x3fffffffffffcd8d, 0x3fffffffffffcd8b,
    0x3fffffffffffcd85, 0x3fffffffffffcd5d, 0x3fffffffffffcd2b, 0x3fffffffffffccbb,
    0x3fffffffffffcc7d, 0x3fffffffffffcc5f, 0x3fffffffffffcc31, 0x3fffffffffffcbe9,
    0x3fffffffffffcbe7, 0x3fffffffffffcb65, 0x3fffffffffffcb51, 0x3fffffffffffcae7,
    0x3fffffffffffcac1, 0x3fffffffffffcab5, 0x3fffffffffffca75, 0x3fffffffffffca45,
    0x3fffffffffffca1f, 0x3fffffffffffca0d, 0x3fffffffffffc9eb, 0x3fffffffffffc9e9,
    0x3fffffffffffc9cb, 0x3fffffffffffc99b, 0x3fffffffffffc955, 0x3fffffffffffc8ef,
    0x3fffffffffffc8e9, 0x3fffffffffffc8c3, 0x3fffffffffffc89f, 0x3fffffffffffc887,
    0x3fffffffffffc859, 0x3fffffffffffc835, 0x3fffffffffffc80b, 0x3fffffffffffc7c9,
    0x3fffffffffffc7bb, 0x3fffffffffffc757, 0x3fffffffffffc701, 0x3fffffffffffc6df,
    0x3fffffffffffc6bf, 0x3fffffffffffc655, 0x3fffffffffffc63d, 0x3fffffffffffc637,
    0x3fffffffffffc61f, 0x3fffffffffffc5e7, 0x3fffffffffffc5bf, 0x3fffffffffffc595,
    0x3fffffffffffc559, 0x3fffffffffffc54d, 0x3fffffffffffc533, 0x3fffffffffffc457,
    0x3fffffffffffc3fd, 0x3fffffffffffc3d7, 0x3fffffffffffc3c7, 0x3fffffffffffc3af,
    0x3fffffffffffc383, 0x3fffffffffffc37d, 0x3fffffffffffc305, 0x3fffffffffffc301,
    0x3fffffffffffc2e1, 0x3fffffffffffc2bd, 0x3fffffffffffc29b, 0x3fffffffffffc28d,
    0x3fffffffffffc281, 0x3fffffffffffc257, 0x3fffffffffffc24d, 0x3fffffffffffc209,
    0x3fffffffffffc205, 0x3fffffffffffc1fd, 0x3fffffffffffc1f3, 0x3fffffffffffc1df,
    0x3fffffffffffc1d9, 0x3fffffffffffc15b, 0x3fffffffffffc139, 0x3fffffffffffc10d,
    0x3fffffffffffc0e9, 0x3fffffffffffc0e3, 0x3fffffffffffc0ad, 0x3fffffffffffc08b,
    0x3fffffffffffc089, 0x3fffffffffffbfcb, 0x3fffffffffffbfb7, 0x3fffffffffffbf99,
    0x3fffffffffffbf59, 0x3fffffffffffbf4d, 0x3fffffffffffbf21, 0x3fffffffffffbe91,
    0x3fffffffffffbe85, 0x3fffffffffffbe37, 0x3fffffffffffbe0d, 0x3fffffffffffbd73,
    0x3fffffffffffbd6b, 0x3fffffffffffbd29, 0x3fffffffffffbce3, 0x3fffffffffffbcdd,
    0x3fffffffffffbcd7, 0x3fffffffffffbc3f, 0x3fffffffffffbc05, 0x3fffffffffffbc03,
    0x3fffffffffffbb93, 0x3fffffffffffbb81, 0x3fffffffffffbb7f, 0x3fffffffffffbb67,
    0x3fffffffffffbb43, 0x3fffffffffffbb2b, 0x3fffffffffffbae9, 0x3fffffffffffbabb,
    0x3fffffffffffbab3, 0x3fffffffffffbaa9, 0x3fffffffffffba9b, 0x3fffffffffffba85,
    0x3fffffffffffba41, 0x3fffffffffffba35, 0x3fffffffffffba05, 0x3fffffffffffb9f3,
    0x3fffffffffffb9d5, 0x3fffffffffffb9b3, 0x3fffffffffffb995, 0x3fffffffffffb96f,
    0x3fffffffffffb95d, 0x3fffffffffffb93b, 0x3fffffffffffb91d, 0x3fffffffffffb905,
    0x3fffffffffffb8f7, 0x3fffffffffffb8ab, 0x3fffffffffffb88b, 0x3fffffffffffb875,
    0x3fffffffffffb873, 0x3fffffffffffb84f, 0x3fffffffffffb837, 0x3fffffffffffb833,
    0x3fffffffffffb815, 0x3fffffffffffb7cb, 0x3fffffffffffb7b5, 0x3fffffffffffb78f,
    0x3fffffffffffb743, 0x3fffffffffffb741, 0x3fffffffffffb719, 0x3fffffffffffb6f9,
    0x3fffffffffffb6bf, 0x3fffffffffffb699, 0x3fffffffffffb63f, 0x3fffffffffffb5cf,
    0x3fffffffffffb52b, 0x3fffffffffffb521, 0x3fffffffffffb4d3, 0x3fffffffffffb4a3,
    0x3fffffffffffb497, 0x3fffffffffffb459, 0x3fffffffffffb3ed, 0x3fffffffffffb3c5,
    0x3fffffffffffb39f, 0x3fffffffffffb38d, 0x3fffffffffffb347, 0x3fffffffffffb329,
    0x3fffffffffffb309, 0x3fffffffffffb2df, 0x3fffffffffffb2d3, 0x3fffffffffffb28d,
    0x3fffffffffffb26f, 0x3fffffffffffb22d, 0x3fffffffffffb20d, 0x3fffffffffffb1d9,
    0x3fffffffffffb1c7, 0x3fffffffffffb1bf, 0x3fffffffffffb16b, 0x3fffffffffffb0a7,
    0x3fffffffffffb0a5, 0x3fffffffffffb053, 0x3fffffffffffb023, 0x3fffffffffffafc1,
    0x3fffffffffffaf8b, 0x3fffffffffffaf79, 0x3fffffffffffaf63, 0x3fffffffffffaf49,
    0x3fffffffffffaee5, 0x3fffffffffffaea1, 0x3fffffffffffae9b, 0x3fffffffffffae91,
    0x3fffffffffffae8b, 0x3fffffffffffae73, 0x3fffffffffffae3d, 0x3fffffffffffae11,
    0x3fffffffffffade9, 0x3fffffffffffadcf, 0x3fffffffffffadb7, 0x3fffffffffffadb1,
    0x3fffffffffffad8d, 0x3fffffffffffad6b, 0x3fffffffffffad69, 0x3fffffffffffad11,
    0x3fffffffffffad0b, 0x3fffffffffffac6f, 0x3fffffffffffac31, 0x3fffffffffffac21,
    0x3fffffffffffac13, 0x3fffffffffffac01, 0x3fffffffffffabc5, 0x3fffffffffffabc1,
    0x3fffffffffffabb3, 0x3fffffffffffab9b, 0x3fffffffffffab7d, 0x3fffffffffffab41,
    0x3fffffffffffab2f, 0x3fffffffffffab13, 0x3fffffffffffaafb, 0x3fffffffffffaacb,
    0x3fffffffffffaaab, 0x3fffffffffffaa95, 0x3fffffffffffaa7d, 0x3fffffffffffaa69,
    0x3fffffffffffaa45, 0x3fffffffffffa9e7, 0x3fffffffffffa9c7, 0x3fffffffffffa9b1,
    0x3fffffffffffa997, 0x3fffffffffffa927, 0x3fffffffffffa91b, 0x3fffffffffffa8f7,
    0x3fffffffffffa8df, 0x3fffffffffffa8b5, 0x3fffffffffffa87f, 0x3fffffffffffa855,
    0x3fffffffffffa847, 0x3fffffffffffa82b, 0x3fffffffffffa811, 0x3fffffffffffa801,
    0x3fffffffffffa7ed, 0x3fffffffffffa763, 0x3fffffffffffa751, 0x3fffffffffffa6e1,
    0x3fffffffffffa6cd, 0x3fffffffffffa6a3, 0x3fffffffffffa663, 0x3fffffffffffa65d,
    0x3fffffffffffa64b, 0x3fffffffffffa60f, 0x3fffffffffffa607, 0x3fffffffffffa5fd,
    0x3fffffffffffa5e9, 0x3fffffffffffa5c1, 0x3fffffffffffa5af, 0x3fffffffffffa59b,
    0x3fffffffffffa579, 0x3fffffffffffa55b, 0x3fffffffffffa54f, 0x3fffffffffffa517,
    0x3fffffffffffa4bf, 0x3fffffffffffa4a7, 0x3fffffffffffa483, 0x3fffffffffffa447,
    0x3fffffffffffa3f7, 0x3fffffffffffa3ed, 0x3fffffffffffa3b5, 0x3fffffffffffa387,
    0x3fffffffffffa36f, 0x3fffffffffffa35b, 0x3fffffffffffa32b, 0x3fffffffffffa28f,
    0x3fffffffffffa279, 0x3fffffffffffa277, 0x3fffffffffffa267, 0x3fffffffffffa24f,
    0x3fffffffffffa243, 0x3fffffffffffa21f, 0x3fffffffffffa1ef, 0x3fffffffffffa1c5,
    0x3fffffffffffa1b9, 0x3fffffffffffa1a5, 0x3fffffffffffa16b, 0x3fffffffffffa15f,
    0x3fffffffffffa15d, 0x3fffffffffffa157, 0x3fffffffffffa117, 0x3fffffffffffa0c3,
    0x3fffffffffffa08b, 0x3fffffffffffa081, 0x3fffffffffffa06d, 0x3fffffffffffa055,
    0x3fffffffffffa051, 0x3fffffffffffa03f, 0x3fffffffffffa03d, 0x3fffffffffffa027,
    0x3fffffffffff9fef, 0x3fffffffffff9f91, 0x3fffffffffff9f77, 0x3fffffffffff9f11,
    0x3fffffffffff9f05, 0x3fffffffffff9ec9, 0x3fffffffffff9e9b, 0x3fffffffffff9e5f,
    0x3fffffffffff9e5d, 0x3fffffffffff9e53, 0x3fffffffffff9e23, 0x3fffffffffff9db1,
    0x3fffffffffff9d99, 0x3fffffffffff9d81, 0x3fffffffffff9d3d, 0x3fffffffffff9d13,
    0x3fffffffffff9cef, 0x3fffffffffff9ccb, 0x3fffffffffff9cc7, 0x3fffffffffff9ca7,
    0x3fffffffffff9c8b, 0x3fffffffffff9c7f, 0x3fffffffffff9c73, 0x3fffffffffff9c61,
    0x3fffffffffff9bf5, 0x3fffffffffff9be7, 0x3fffffffffff9bbf, 0x3fffffffffff9b95,
    0x3fffffffffff9b77, 0x3fffffffffff9b6f, 0x3fffffffffff9b5d, 0x3fffffffffff9b41,
    0x3fffffffffff9b35, 0x3fffffffffff9ad9, 0x3fffffffffff9aa9, 0x3fffffffffff9a8d,
    0x3fffffffffff9a69, 0x3fffffffffff9a27, 0x3fffffffffff9a1f, 0x3fffffffffff9a0f,
    0x3fffffffffff9a01, 0x3fffffffffff99df, 0x3fffffffffff99b9, 0x3fffffffffff99a7,
    0x3fffffffffff999b, 0x3fffffffffff9937, 0x3fffffffffff992f, 0x3fffffffffff990b,
    0x3fffffffffff98e9, 0x3fffffffffff9877, 0x3fffffffffff97f9, 0x3fffffffffff97eb,
    0x3fffffffffff97cf, 0x3fffffffffff97a9, 0x3fffffffffff979f, 0x3fffffffffff978b,
    0x3fffffffffff9769, 0x3fffffffffff974f, 0x3fffffffffff973f, 0x3fffffffffff9727,
    0x3fffffffffff96ef, 0x3fffffffffff96dd, 0x3fffffffffff96a3, 0x3fffffffffff9697,
    0x3fffffffffff962b, 0x3fffffffffff95ed, 0x3fffffffffff95d1, 0x3fffffffffff9569,
    0x3fffffffffff9557, 0x3fffffffffff9505, 0x3fffffffffff94eb, 0x3fffffffffff94b5,
    0x3fffffffffff9499, 0x3fffffffffff9467, 0x3fffffffffff9457, 0x3fffffffffff941f,
    0x3fffffffffff9403, 0x3fffffffffff93f1, 0x3fffffffffff93e3, 0x3fffffffffff9395,
    0x3fffffffffff9389, 0x3fffffffffff92d7, 0x3fffffffffff929b, 0x3fffffffffff9293,
    0x3fffffffffff922d, 0x3fffffffffff9205, 0x3fffffffffff91f3, 0x3fffffffffff91eb,
    0x3fffffffffff91e1, 0x3fffffffffff91c7, 0x3fffffffffff9185, 0x3fffffffffff917b,
    0x3fffffffffff9101, 0x3fffffffffff90bf, 0x3fffffffffff90a9, 0x3fffffffffff9059,
    0x3fffffffffff904d, 0x3fffffffffff9025, 0x3fffffffffff8ffb, 0x3fffffffffff8fb1,
    0x3fffffffffff8fad, 0x3fffffffffff8fa7, 0x3fffffffffff8f6f, 0x3fffffffffff8f57,
    0x3fffffffffff8f2d, 0x3fffffffffff8ef3, 0x3fffffffffff8ed3, 0x3fffffffffff8eab,
    0x3fffffffffff8e9f, 0x3fffffffffff8e93, 0x3fffffffffff8e7f, 0x3fffffffffff8e45,
    0x3fffffffffff8e3d, 0x3fffffffffff8e1f, 0x3fffffffffff8de3, 0x3fffffffffff8db9,
    0x3fffffffffff8da3, 0x3fffffffffff8d95, 0x3fffffffffff8d91, 0x3fffffffffff8d67,
    0x3fffffffffff8d17, 0x3fffffffffff8c47, 0x3fffffffffff8c3f, 0x3fffffffffff8bf9,
    0x3fffffffffff8bb5, 0x3fffffffffff8b51, 0x3fffffffffff8b37, 0x3fffffffffff8b1f,
    0x3fffffffffff8b1b, 0x3fffffffffff8ac5, 0x3fffffffffff8a71, 0x3fffffffffff8a49,
    0x3fffffffffff8a43, 0x3fffffffffff8a3d, 0x3fffffffffff89db, 0x3fffffffffff89a7,
    0x3fffffffffff8993, 0x3fffffffffff890b, 0x3fffffffffff8909, 0x3fffffffffff88e1,
    0x3fffffffffff889d, 0x3fffffffffff888b, 0x3fffffffffff8863, 0x3fffffffffff8843,
    0x3fffffffffff882b, 0x3fffffffffff87ef, 0x3fffffffffff87df, 0x3fffffffffff87d7,
    0x3fffffffffff87a3, 0x3fffffffffff8791, 0x3fffffffffff8753, 0x3fffffffffff873b,
    0x3fffffffffff872b, 0x3fffffffffff8681, 0x3fffffffffff8675, 0x3fffffffffff866f,
    0x3fffffffffff8669, 0x3fffffffffff8609, 0x3fffffffffff85e1, 0x3fffffffffff85df,
    0x3fffffffffff85d5, 0x3fffffffffff85ab, 0x3fffffffffff8599, 0x3fffffffffff8597,
    0x3fffffffffff8593, 0x3fffffffffff8543, 0x3fffffffffff8533, 0x3fffffffffff851f,
    0x3fffffffffff84e5, 0x3fffffffffff8485, 0x3fffffffffff846d, 0x3fffffffffff8465,
    0x3fffffffffff8411, 0x3fffffffffff83ff, 0x3fffffffffff83f3, 0x3fffffffffff83e3,
    0x3fffffffffff83d5, 0x3fffffffffff83b3, 0x3fffffffffff832d, 0x3fffffffffff82e1,
    0x3fffffffffff82c1, 0x3fffffffffff829f, 0x3fffffffffff827b, 0x3fffffffffff8227,
    0x3fffffffffff8215, 0x3fffffffffff8213, 0x3fffffffffff8209, 0x3fffffffffff8201,
    0x3fffffffffff81fb, 0x3fffffffffff81dd, 0x3fffffffffff81d3, 0x3fffffffffff81a7,
    0x3fffffffffff8179, 0x3fffffffffff8155, 0x3fffffffffff8141, 0x3fffffffffff813d,
    0x3fffffffffff8125, 0x3fffffffffff8113, 0x3fffffffffff810b, 0x3fffffffffff808f,
    0x3fffffffffff806f, 0x3fffffffffff804b, 0x3fffffffffff8021, 0x3fffffffffff7fc7,
    0x3fffffffffff7fbb, 0x3fffffffffff7f6f, 0x3fffffffffff7f4f, 0x3fffffffffff7f33,
    0x3fffffffffff7ef5, 0x3fffffffffff7ee9, 0x3fffffffffff7ec5, 0x3fffffffffff7eaf,
    0x3fffffffffff7ea9, 0x3fffffffffff7e9d, 0x3fffffffffff7e4f, 0x3fffffffffff7e4d,
    0x3fffffffffff7e11, 0x3fffffffffff7df3, 0x3fffffffffff7de7, 0x3fffffffffff7db3,
    0x3fffffffffff7d83, 0x3fffffffffff7d35, 0x3fffffffffff7cf1, 0x3fffffffffff7ca5,
    0x3fffffffffff7c97, 0x3fffffffffff7c51, 0x3fffffffffff7c25, 0x3fffffffffff7bfd,
    0x3fffffffffff7bfb, 0x3fffffffffff7ba3, 0x3fffffffffff7b9b, 0x3fffffffffff7b4d,
    0x3fffffffffff7b3d, 0x3fffffffffff7a3b, 0x3fffffffffff7a33, 0x3fffffffffff7a0b,
    0x3fffffffffff7a03, 0x3fffffffffff79fd, 0x3fffffffffff79d9, 0x3fffffffffff79cd,
    0x3fffffffffff79bb, 0x3fffffffffff79b7, 0x3fffffffffff79a9, 0x3fffffffffff79a3,
    0x3fffffffffff7985, 0x3fffffffffff7981, 0x3fffffffffff78c7, 0x3fffffffffff78b3,
    0x3fffffffffff788b, 0x3fffffffffff786d, 0x3fffffffffff785b, 0x3fffffffffff77f5,
    0x3fffffffffff77ef, 0x3fffffffffff77b9, 0x3fffffffffff7781, 0x3fffffffffff7777,
    0x3fffffffffff7765, 0x3fffffffffff7733, 0x3fffffffffff7723, 0x3fffffffffff771d,
    0x3fffffffffff7709, 0x3fffffffffff76fd, 0x3fffffffffff76e7, 0x3fffffffffff76c3,
    0x3fffffffffff76a5, 0x3fffffffffff7697, 0x3fffffffffff764b, 0x3fffffffffff7649,
    0x3fffffffffff75f7, 0x3fffffffffff75f1, 0x3fffffffffff75e5, 0x3fffffffffff756b,
    0x3fffffffffff7547, 0x3fffffffffff7501, 0x3fffffffffff74f9, 0x3fffffffffff74db,
    0x3fffffffffff74d1, 0x3fffffffffff7475, 0x3fffffffffff7445, 0x3fffffffffff7439,
    0x3fffffffffff73ff, 0x3fffffffffff73eb, 0x3fffffffffff73df, 0x3fffffffffff73c1,
    0x3fffffffffff734b, 0x3fffffffffff7349, 0x3fffffffffff7321, 0x3fffffffffff72d9,
    0x3fffffffffff72d7, 0x3fffffffffff72b5, 0x3fffffffffff729d, 0x3fffffffffff7283,
    0x3fffffffffff721d, 0x3fffffffffff71fb, 0x3fffffffffff7189, 0x3fffffffffff717d,
    0x3fffffffffff714b, 0x3fffffffffff7117, 0x3fffffffffff708d, 0x3fffffffffff705d,
    0x3fffffffffff7031, 0x3fffffffffff6fc7, 0x3fffffffffff6fbb, 0x3fffffffffff6fad,
    0x3fffffffffff6f55, 0x3fffffffffff6f07, 0x3fffffffffff6ee9, 0x3fffffffffff6ea1,
    0x3fffffffffff6e0f, 0x3fffffffffff6df7, 0x3fffffffffff6dcf, 0x3fffffffffff6dcd,
    0x3fffffffffff6dbd, 0x3fffffffffff6d8d, 0x3fffffffffff6d87, 0x3fffffffffff6d09,
    0x3fffffffffff6cc1, 0x3fffffffffff6c73, 0x3fffffffffff6c41, 0x3fffffffffff6c2f,
    0x3fffffffffff6c05, 0x3fffffffffff6bfb, 0x3fffffffffff6be9, 0x3fffffffffff6bd5,
    0x3fffffffffff6bbd, 0x3fffffffffff6bb7, 0x3fffffffffff6b65, 0x3fffffffffff6b63,
    0x3fffffffffff6b5d, 0x3fffffffffff6b47, 0x3fffffffffff6b39, 0x3fffffffffff6a91,
    0x3fffffffffff6a81, 0x3fffffffffff6a4b, 0x3fffffffffff6a43, 0x3fffffffffff6a25,
    0x3fffffffffff69d1, 0x3fffffffffff69cd, 0x3fffffffffff6995, 0x3fffffffffff698f,
    0x3fffffffffff695b, 0x3fffffffffff6955, 0x3fffffffffff690b, 0x3fffffffffff68a1,
    0x3fffffffffff6893, 0x3fffffffffff688d, 0x3fffffffffff67f3, 0x3fffffffffff67d9,
    0x3fffffffffff67cf, 0x3fffffffffff67af, 0x3fffffffffff67a5, 0x3fffffffffff6791,
    0x3fffffffffff677f, 0x3fffffffffff6775, 0x3fffffffffff6757, 0x3fffffffffff6755,
    0x3fffffffffff671f, 0x3fffffffffff6701, 0x3fffffffffff66dd, 0x3fffffffffff6697,
    0x3fffffffffff6661, 0x3fffffffffff664f, 0x3fffffffffff65b7, 0x3fffffffffff65b1,
    0x3fffffffffff65a5, 0x3fffffffffff6511, 0x3fffffffffff64e7, 0x3fffffffffff64df,
    0x3fffffffffff64cd, 0x3fffffffffff64b5, 0x3fffffffffff6455, 0x3fffffffffff6433,
    0x3fffffffffff6431, 0x3fffffffffff6415, 0x3fffffffffff6413, 0x3fffffffffff63d7,
    0x3fffffffffff63c7, 0x3fffffffffff63b9, 0x3fffffffffff6359, 0x3fffffffffff633d,
    0x3fffffffffff632f, 0x3fffffffffff6329, 0x3fffffffffff62fb, 0x3fffffffffff62e9,
    0x3fffffffffff62bf, 0x3fffffffffff62a7, 0x3fffffffffff625f, 0x3fffffffffff6251,
    0x3fffffffffff6217, 0x3fffffffffff61c9, 0x3fffffffffff61c7, 0x3fffffffffff61bd,
    0x3fffffffffff61b5, 0x3fffffffffff618d, 0x3fffffffffff6185, 0x3fffffffffff6143,
    0x3fffffffffff613f, 0x3fffffffffff60f7, 0x3fffffffffff60a3, 0x3fffffffffff6041,
    0x3fffffffffff6031, 0x3fffffffffff5fe1, 0x3fffffffffff5fdd, 0x3fffffffffff5fdb,
    0x3fffffffffff5fd1, 0x3fffffffffff5f0b, 0x3fffffffffff5e7f, 0x3fffffffffff5e6f,
    0x3fffffffffff5e4f, 0x3fffffffffff5e43, 0x3fffffffffff5e33, 0x3fffffffffff5e13,
    0x3fffffffffff5dd9, 0x3fffffffffff5dbb, 0x3fffffffffff5d49, 0x3fffffffffff5ce3,
    0x3fffffffffff5cb1, 0x3fffffffffff5c81, 0x3fffffffffff5c5d, 0x3fffffffffff5c29,
    0x3fffffffffff5c21, 0x3fffffffffff5ba3, 0x3fffffffffff5b73, 0x3fffffffffff5b6d,
];
