from src.schemas.common.bitsets import bits_of, full_mask, is_subset, iter_bits, mask_of

__all__ = ["bits_of", "full_mask", "is_subset", "iter_bits", "mask_of"]
