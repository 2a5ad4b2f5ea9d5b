import { Component, Input, input } from '@angular/core';

export interface BookingCardConfig {
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
  selector: 'app-booking-card',
  template: `<div>{{ config.name }}</div>`
})
export class BookingCardComponent {
  @Input() config!: BookingCardConfig;
}
