import { Component, Input, input } from '@angular/core';

export interface OrderCardConfig {
  name: string;
  age: number;
  email: string;
  role: string;
  isActive: boolean;
  showAvatar: boolean;
  highlight: boolean;
}

@Component({
  selector: 'app-order-card',
  template: `<div>{{ config.name }}</div>`
})
export class OrderCardComponent {
  @Input() config!: OrderCardConfig;
}
