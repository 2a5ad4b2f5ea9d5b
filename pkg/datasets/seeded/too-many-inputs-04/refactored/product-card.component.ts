import { Component, Input, input } from '@angular/core';

export interface ProductCardConfig {
  name: string;
  age: number;
  email: string;
  role: string;
  isActive: boolean;
  showAvatar: boolean;
  highlight: boolean;
  locale: string;
  theme: string;
}

@Component({
  selector: 'app-product-card',
  template: `<div>{{ config.name }}</div>`
})
export class ProductCardComponent {
  @Input() config!: ProductCardConfig;
}
